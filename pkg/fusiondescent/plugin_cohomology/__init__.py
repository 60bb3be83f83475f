# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

from fusiondescent.cohomology import (Cochain, FiniteAbelianGroup, GModule,
                                      cohomologous, cohomology_group,
                                      cyclic_three_cocycle, is_cocycle,
                                      pullback_class)
from fusiondescent.errors import InputError
from fusiondescent.plugin_common import load_json_argument, parse_int_list


class PluginCohomology:
    """
    Subcommands on group cohomology: H^k of a finite abelian group,
    cocycle checks and the classes of the cyclic 3-cocycles.
    """

    COMMANDS = {
        "cohomology": "cohomology",
        "cocycle-check": "cocycle_check",
        "cocycle-class": "cocycle_class",
    }

    def __init__(self, session):
        self.log = None
        self.cap = None

        self.get_session_values(session)

    def get_session_values(self, session):
        self.log = session.log
        self.cap = session.cap

    @staticmethod
    def add_parsers(subparsers, parents):
        cohomology = subparsers.add_parser(
            "cohomology", parents=parents, help="Compute H^k(G, M).")
        cohomology.add_argument("--group", required=True,
                                help="cyclic orders of G, comma separated")
        cohomology.add_argument("--module", required=True,
                                help="cyclic orders of M, comma separated")
        cohomology.add_argument("--action",
                                help="JSON list of one matrix per generator "
                                     "(default: trivial action)")
        cohomology.add_argument("--degree", type=int, required=True)

        check = subparsers.add_parser(
            "cocycle-check", parents=parents, help="Is a cochain a cocycle?")
        source = check.add_mutually_exclusive_group(required=True)
        source.add_argument("--cochain", help="cochain JSON, inline or a path")
        source.add_argument("--cyclic", type=int, metavar="N",
                            help="use omega_a on Z/N")
        check.add_argument("--a", type=int, default=1)
        check.add_argument("--action", help="JSON action matrices")

        klass = subparsers.add_parser(
            "cocycle-class", parents=parents,
            help="Class of omega_a pulled back along x -> s x, or a "
                 "cobounding cochain for two cochains.")
        klass.add_argument("--n", type=int)
        klass.add_argument("--a", type=int)
        klass.add_argument("--s", type=int)
        klass.add_argument("--cochain", help="first cochain JSON")
        klass.add_argument("--other", help="second cochain JSON")
        klass.add_argument("--action", help="JSON action matrices")

    def _module(self, group, orders, action):
        if action is None:
            return GModule.trivial(group, orders)
        return GModule(tuple(orders), tuple(load_json_argument(action, "action")))

    def cohomology(self, args):
        group = FiniteAbelianGroup(tuple(parse_int_list(args.group, "group")))
        module = self._module(group, parse_int_list(args.module, "module"),
                              args.action)
        result = cohomology_group(group, module, args.degree, self.cap)
        self.log.info(f"H^{args.degree}({group}, {module.cyclic_orders}) "
                      f"= {result}")
        return {"group": list(group.cyclic_orders),
                "module": module.to_json(), "degree": args.degree,
                **result.to_json()}

    def cocycle_check(self, args):
        if args.cyclic is not None:
            cochain = cyclic_three_cocycle(args.cyclic, args.a)
        else:
            cochain = Cochain.from_json(load_json_argument(args.cochain, "cochain"))
        module = self._module(cochain.group, cochain.module_orders, args.action)
        return {"group": list(cochain.group.cyclic_orders),
                "module": list(cochain.module_orders),
                "degree": cochain.degree,
                "is_cocycle": is_cocycle(cochain.group, module, cochain)}

    def cocycle_class(self, args):
        if args.cochain is not None or args.other is not None:
            first = Cochain.from_json(load_json_argument(args.cochain, "cochain"))
            second = Cochain.from_json(load_json_argument(args.other, "other"))
            module = self._module(first.group, first.module_orders, args.action)
            b = cohomologous(first.group, module, first, second, self.cap)
            return {"cohomologous": b is not None,
                    "cobounding": b.to_json() if b is not None else None}
        missing = [f"--{k}" for k in ("n", "a", "s") if getattr(args, k) is None]
        if missing:
            raise InputError(f"cocycle-class needs {', '.join(missing)}")
        result = pullback_class(args.n, args.a, args.s, self.cap)
        return {**result.to_json(), "expected": args.s ** 2 * args.a % args.n}
