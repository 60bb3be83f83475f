# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

from fusiondescent.descent import (braided_minimal_field, conjugate_twist_exists,
                                   forms_of_pointed_rank2, minimal_field,
                                   real_form_exists)
from fusiondescent.plugin_common import parse_field


class PluginDescent:
    """
    Subcommands on the pointed categories Vec_{Z/n}^omega: minimal
    fields, real forms and the forms of the rank 2 case.
    """

    COMMANDS = {
        "min-field": "min_field",
        "real-form": "real_form",
        "forms": "forms",
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
        field = subparsers.add_parser(
            "min-field", parents=parents,
            help="Minimal field of definition of Vec_{Z/n}^omega.")
        field.add_argument("--n", type=int, required=True)
        field.add_argument("--braided", action="store_true",
                           help="the braided category (n an odd prime)")

        real = subparsers.add_parser(
            "real-form", parents=parents,
            help="Does Vec_{Z/p}^omega have a real form?")
        real.add_argument("--p", type=int, required=True)
        real.add_argument("--trivial", action="store_true",
                          help="omega trivial (default: non-trivial)")
        real.add_argument("--verify", action="store_true",
                          help="cross-check with the coboundary solver")

        forms = subparsers.add_parser(
            "forms", parents=parents, help="Forms of Vec_{Z/2}^omega over K.")
        forms.add_argument("--field", required=True)
        forms.add_argument("--twisted", action="store_true",
                           help="omega non-trivial")

    def min_field(self, args):
        if args.braided:
            report = braided_minimal_field(args.n, self.cap)
        else:
            report = minimal_field(args.n, cap=self.cap)
        self.log.info(f"minimal field for n={args.n}: {report.field_note}")
        return report.to_json()

    def real_form(self, args):
        verdict = real_form_exists(args.p, not args.trivial)
        out = verdict.to_json()
        if args.verify:
            out["conjugate_twist_exists"] = conjugate_twist_exists(args.p, self.cap)
        return out

    def forms(self, args):
        K = parse_field(args.field)
        forms = forms_of_pointed_rank2(K, args.twisted)
        return {"field": str(K), "twisted": args.twisted, "count": len(forms),
                "forms": [f.to_json() for f in forms]}
