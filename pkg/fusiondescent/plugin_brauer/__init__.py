# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

from fusiondescent.brauer import (Place, QuaternionSymbol, br_n, candidate_places,
                                  hilbert_symbol, local_invariant,
                                  quasi_trivial_forms_group, ramified_places)
from fusiondescent.errors import InputError
from fusiondescent.plugin_common import parse_field, parse_int_list, parse_rational


class PluginBrauer:
    """Subcommands on Hilbert symbols, quaternion algebras and Br_n(K)."""

    COMMANDS = {
        "hilbert": "hilbert",
        "ramified": "ramified",
        "br-n": "br_n",
    }

    def __init__(self, session):
        self.log = None

        self.get_session_values(session)

    def get_session_values(self, session):
        self.log = session.log

    @staticmethod
    def add_parsers(subparsers, parents):
        hilbert = subparsers.add_parser(
            "hilbert", parents=parents, help="Hilbert symbol (a, b)_v.")
        hilbert.add_argument("--a", required=True)
        hilbert.add_argument("--b", required=True)
        hilbert.add_argument("--place", required=True,
                             help="'real' or a prime p")

        ramified = subparsers.add_parser(
            "ramified", parents=parents,
            help="Ramified places of the quaternion algebra Q(a, b).")
        ramified.add_argument("--a", required=True)
        ramified.add_argument("--b", required=True)

        torsion = subparsers.add_parser(
            "br-n", parents=parents,
            help="Br_n(K), or the quasi-trivial forms group for --orders.")
        torsion.add_argument("--field", required=True)
        torsion.add_argument("--n", type=int)
        torsion.add_argument("--orders",
                             help="orders n_j of the universal grading group")

    def hilbert(self, args):
        a = parse_rational(args.a, "a")
        b = parse_rational(args.b, "b")
        place = Place.parse(args.place)
        return {"a": str(a), "b": str(b), "place": place.to_json(),
                "symbol": hilbert_symbol(a, b, place)}

    def ramified(self, args):
        q = QuaternionSymbol(parse_rational(args.a, "a"),
                             parse_rational(args.b, "b"))
        places = ramified_places(q)
        return {"algebra": q.to_json(),
                "ramified": [v.to_json() for v in places],
                "division": bool(places),
                "local_invariants": {str(v): str(local_invariant(q, v))
                                     for v in candidate_places(q.a, q.b)}}

    def br_n(self, args):
        K = parse_field(args.field)
        if (args.n is None) == (args.orders is None):
            raise InputError("give exactly one of --n and --orders")
        if args.n is not None:
            group = br_n(K, args.n)
            return {"field": str(K), "n": args.n, **group.to_json()}
        orders = parse_int_list(args.orders, "orders")
        group = quasi_trivial_forms_group(orders, K)
        return {"field": str(K), "orders": orders, **group.to_json()}
