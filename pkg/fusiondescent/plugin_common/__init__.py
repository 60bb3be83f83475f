# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

import json
import os

from sympy import Rational

from fusiondescent.errors import InputError
from fusiondescent.fields import FieldClass


class PluginCommon:
    """
    Rendering and argument parsing shared by every plugin. Results are
    plain dicts; they are printed either as one JSON document or as an
    aligned two-column table of flattened keys.
    """

    def __init__(self, session):
        self.config = None
        self.log = None

        self.get_session_values(session)

    def get_session_values(self, session):
        self.config = session.config
        self.log = session.log

    def render(self, payload, fmt="json"):
        if fmt == "json":
            return json.dumps(payload, ensure_ascii=False)
        if fmt == "table":
            rows = list(self.flatten(payload))
            if not rows:
                return ""
            width = max(len(key) for key, _ in rows)
            return "\n".join(f"{key:<{width}}  {value}" for key, value in rows)
        raise InputError(f"unknown output format '{fmt}'")

    def flatten(self, payload, prefix=""):
        """Yield (dotted key, value) pairs; scalar lists stay on one row."""
        if isinstance(payload, dict):
            for key, value in payload.items():
                name = f"{prefix}.{key}" if prefix else str(key)
                yield from self.flatten(value, name)
        elif isinstance(payload, list) and any(
                isinstance(v, (dict, list)) for v in payload):
            for i, value in enumerate(payload):
                yield from self.flatten(value, f"{prefix}[{i}]")
        elif isinstance(payload, list):
            yield prefix, ", ".join(str(v) for v in payload) or "-"
        else:
            yield prefix, "-" if payload is None else payload


def load_json_argument(text, name):
    """Inline JSON, or the path of a file holding JSON."""
    if text is None:
        raise InputError(f"--{name} is required")
    source = text
    if not text.lstrip().startswith(("{", "[")) and os.path.exists(text):
        try:
            with open(text, "r") as f:
                source = f.read()
        except OSError as e:
            raise InputError(f"cannot read {text}: {e}") from None
    try:
        return json.loads(source)
    except ValueError as e:
        raise InputError(f"--{name} is neither JSON nor a readable file: {e}") from None


def parse_int_list(text, name):
    try:
        return [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--{name} must be a comma separated list of integers") from None


def parse_rational(text, name):
    try:
        value = Rational(str(text))
    except (TypeError, ValueError, SyntaxError):
        raise InputError(f"--{name} must be a rational number, got '{text}'") from None
    if value == 0:
        raise InputError(f"--{name} must be non-zero")
    return value


def parse_field(text):
    if text is None:
        return None
    return FieldClass.parse(text)


def add_family_arguments(parser, required_family=True):
    """The family name and its integer parameters."""
    if required_family:
        parser.add_argument("family", choices=["r-m", "r-pr", "s-k", "t-k", "s-ab"])
    else:
        parser.add_argument("--family", choices=["r-m", "r-pr", "s-k", "t-k", "s-ab"])
    for name in ("m", "p", "r", "k", "a", "b"):
        parser.add_argument(f"--{name}", type=int)


def family_params(args, names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise InputError(f"family {args.family} needs "
                         + ", ".join(f"--{n}" for n in missing))
    return {n: getattr(args, n) for n in names}
