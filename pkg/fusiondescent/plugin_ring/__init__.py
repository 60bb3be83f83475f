# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

from fusiondescent.arith import generated_subgroup
from fusiondescent.based_ring import (FAMILIES, BasedRing, Strength, fp_dim,
                                      orbit_ring, verify_based_ring)
from fusiondescent.errors import InputError
from fusiondescent.plugin_common import (add_family_arguments, family_params,
                                         load_json_argument, parse_int_list)


class PluginRing:
    """
    Subcommands on based rings: axiom checks, the named families,
    Frobenius-Perron dimensions and Galois orbit rings.
    """

    COMMANDS = {
        "verify-ring": "verify_ring",
        "construct": "construct",
        "fp-dim": "fp_dim",
        "orbit-ring": "orbit_ring",
    }

    def __init__(self, session):
        self.log = None
        self.fp_tolerance = None
        self.fp_max_iterations = None

        self.get_session_values(session)

    def get_session_values(self, session):
        self.log = session.log
        self.fp_tolerance = session.fp_tolerance
        self.fp_max_iterations = session.fp_max_iterations

    @staticmethod
    def add_parsers(subparsers, parents):
        verify = subparsers.add_parser(
            "verify-ring", parents=parents,
            help="Check the weak (or strict) based ring axioms.")
        verify.add_argument("--ring", help="ring JSON, inline or a file path")
        verify.add_argument("--strength", choices=["weak", "strict"],
                            default="weak")
        add_family_arguments(verify, required_family=False)

        construct = subparsers.add_parser(
            "construct", parents=parents, help="Build a named family.")
        add_family_arguments(construct)

        fp = subparsers.add_parser(
            "fp-dim", parents=parents,
            help="Frobenius-Perron dimension of a basis element.")
        fp.add_argument("--ring", help="ring JSON, inline or a file path")
        fp.add_argument("--index", type=int, help="basis index")
        fp.add_argument("--element",
                        help="coefficients of an element, comma separated")
        fp.add_argument("--regular", action="store_true",
                        help="use the sum of all basis elements")
        add_family_arguments(fp, required_family=False)

        orbit = subparsers.add_parser(
            "orbit-ring", parents=parents,
            help="Galois orbit ring of Z[Z/n] under a subgroup of units.")
        orbit.add_argument("--n", type=int, required=True)
        group = orbit.add_mutually_exclusive_group(required=True)
        group.add_argument("--subgroup", help="all subgroup elements")
        group.add_argument("--generators", help="generators of the subgroup")

    def ring_from_args(self, args):
        if getattr(args, "ring", None) is not None:
            return BasedRing.from_json(load_json_argument(args.ring, "ring"))
        if getattr(args, "family", None) is not None:
            build, names = FAMILIES[args.family]
            return build(*family_params(args, names).values())
        raise InputError("give --ring or a --family with its parameters")

    def verify_ring(self, args):
        ring = self.ring_from_args(args)
        report = verify_based_ring(ring, Strength(args.strength))
        self.log.info(f"verified rank {ring.rank} ring: "
                      f"{len(report.violations)} violations")
        return {"rank": ring.rank, **report.to_json()}

    def construct(self, args):
        build, names = FAMILIES[args.family]
        ring = build(*family_params(args, names).values())
        report = verify_based_ring(ring)
        return {"family": args.family, "ring": ring.to_json(),
                "valid": report.valid}

    def fp_dim(self, args):
        ring = self.ring_from_args(args)
        chosen = [args.index is not None, args.element is not None, args.regular]
        if sum(chosen) != 1:
            raise InputError("give exactly one of --index, --element, --regular")
        if args.index is not None:
            element = args.index
        elif args.regular:
            element = [1] * ring.rank
        else:
            element = parse_int_list(args.element, "element")
        dim = fp_dim(ring, element, self.fp_tolerance, self.fp_max_iterations)
        return {"element": element, **dim.to_json()}

    def orbit_ring(self, args):
        if args.subgroup is not None:
            subgroup = parse_int_list(args.subgroup, "subgroup")
        else:
            subgroup = generated_subgroup(
                args.n, parse_int_list(args.generators, "generators"))
        ring = orbit_ring(args.n, subgroup)
        dims = [fp_dim(ring, i, self.fp_tolerance,
                       self.fp_max_iterations).to_json()["value"]
                for i in range(ring.rank)]
        return {"n": args.n, "subgroup": sorted({h % args.n for h in subgroup}),
                "ring": ring.to_json(), "fp_dims": dims,
                "valid": verify_based_ring(ring).valid}
