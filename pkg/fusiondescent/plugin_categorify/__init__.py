# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

from fusiondescent.based_ring import FAMILIES
from fusiondescent.categorify import categorify
from fusiondescent.plugin_common import (add_family_arguments, family_params,
                                         parse_field)


class PluginCategorify:
    """The categorify subcommand: one verdict per family and parameters."""

    COMMANDS = {
        "categorify": "categorify",
    }

    def __init__(self, session):
        self.log = None

        self.get_session_values(session)

    def get_session_values(self, session):
        self.log = session.log

    @staticmethod
    def add_parsers(subparsers, parents):
        parser = subparsers.add_parser(
            "categorify", parents=parents,
            help="Decide categorifiability of a family member.")
        add_family_arguments(parser)
        parser.add_argument("--field",
                            help="ground field, needed for r-m and r-pr")

    def categorify(self, args):
        params = family_params(args, FAMILIES[args.family][1])
        verdict = categorify(args.family, params, parse_field(args.field))
        self.log.info(f"categorify {args.family} {params}: "
                      f"{verdict.answer.value}")
        return {"family": args.family, "params": params, **verdict.to_json()}
