# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

import argparse
import json
import sys

# local imports
from fusiondescent.errors import FusionDescentError, InputError
from fusiondescent.session import Session, load_config
from fusiondescent.plugin_brauer import PluginBrauer
from fusiondescent.plugin_categorify import PluginCategorify
from fusiondescent.plugin_cohomology import PluginCohomology
from fusiondescent.plugin_common import PluginCommon
from fusiondescent.plugin_descent import PluginDescent
from fusiondescent.plugin_ring import PluginRing

PLUGINS = (PluginRing, PluginCategorify, PluginDescent, PluginCohomology,
           PluginBrauer)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


class Runner:

    def __init__(self, stdout=None, stdin=None):
        self.stdout = stdout or sys.stdout
        self.stdin = stdin or sys.stdin
        self.parser = None
        self.session = None
        self.common = None
        self.handlers = {}

    def build_parser(self):
        """
        The global flags live on the top-level parser and again on every
        subcommand, so they may be given on either side of the
        subcommand name.
        """
        parser = argparse.ArgumentParser(
            prog="fusiondescent",
            description="Descent and categorification of pointed fusion "
                        "categories with exact arithmetic.")
        self.add_global_arguments(parser, argparse.SUPPRESS)
        parser.set_defaults(format="json", log_level=None, log_file=None,
                            config=None, cap=None)
        shared = argparse.ArgumentParser(add_help=False)
        self.add_global_arguments(shared, argparse.SUPPRESS)

        subparsers = parser.add_subparsers(dest="command", required=True)
        for plugin in PLUGINS:
            plugin.add_parsers(subparsers, [shared])
        batch = subparsers.add_parser(
            "batch", parents=[shared],
            help="Run JSON-lines requests, one response line per request.")
        batch.add_argument("requests", help="request file, or - for stdin")
        return parser

    @staticmethod
    def add_global_arguments(parser, default):
        parser.add_argument("--format", choices=["json", "table"],
                            default=default)
        parser.add_argument("--log-level", default=default,
                            help="DEBUG, INFO, WARNING or ERROR")
        parser.add_argument("--log-file", default=default,
                            help="rotating log file (default: stderr)")
        parser.add_argument("--config", default=default,
                            help="JSON logging configuration file")
        parser.add_argument("--cap", type=int, default=default,
                            help="largest |G|^(degree+1)*dim(M) for cohomology")

    def main(self, argv=None):
        self.parser = self.build_parser()
        args = self.parse(argv)
        if args is None:
            return EXIT_USAGE

        try:
            config = load_config(args.config, {"log_level": args.log_level,
                                               "log_file": args.log_file,
                                               "cohomology_cap": args.cap})
            # Create the session shared by the plugins
            self.session = Session(config)
        except FusionDescentError as e:
            print(f"fusiondescent: {e}", file=sys.stderr)
            return e.exit_code

        self.common = PluginCommon(self.session)
        self.handlers = {}
        for plugin_class in PLUGINS:
            plugin = plugin_class(self.session)
            for command, method in plugin_class.COMMANDS.items():
                self.handlers[command] = getattr(plugin, method)

        if args.command == "batch":
            return self.run_batch(args)

        code, payload = self.dispatch(args)
        try:
            print(self.common.render(payload, args.format), file=self.stdout)
        except FusionDescentError as e:
            print(f"fusiondescent: {e}", file=sys.stderr)
            return e.exit_code
        return code

    def parse(self, argv):
        """Parsed arguments, or None after argparse reported a usage error."""
        try:
            return self.parser.parse_args(argv)
        except SystemExit as e:
            if e.code:
                return None
            raise

    def dispatch(self, args):
        """Run one subcommand; returns (exit code, result or error payload)."""
        log = self.session.log
        log.info(f"running {args.command}")
        try:
            return EXIT_OK, self.handlers[args.command](args)
        except FusionDescentError as e:
            log.error(f"{args.command} failed: {e}")
            return e.exit_code, self.error_payload(e)
        except Exception as e:
            log.exception(f"Unexpected error in {args.command}: {e}")
            return EXIT_UNEXPECTED, self.error_payload(e)

    @staticmethod
    def error_payload(error):
        return {"error": {"type": type(error).__name__, "message": str(error)}}

    @staticmethod
    def request_argv(request):
        """
        Turn {"subcommand": ..., "params": {...}} into an argument list:
        "family" becomes the positional family name, True becomes a bare
        flag, False and None are dropped, lists and objects are passed as
        JSON except lists of integers, which are comma separated.
        """
        if not isinstance(request, dict) or "subcommand" not in request:
            raise InputError("request needs a 'subcommand'")
        command = request["subcommand"]
        if command == "batch":
            raise InputError("batch requests cannot nest")
        params = request.get("params") or {}
        if not isinstance(params, dict):
            raise InputError("'params' must be an object")
        argv = [str(command)]
        if "family" in params and command in ("construct", "categorify"):
            argv.append(str(params["family"]))
        for key, value in params.items():
            if key == "family" and command in ("construct", "categorify"):
                continue
            flag = "--" + str(key).replace("_", "-")
            if value is True:
                argv.append(flag)
            elif value is False or value is None:
                continue
            elif isinstance(value, list) and all(
                    isinstance(v, int) and not isinstance(v, bool) for v in value):
                argv.append(f"{flag}={','.join(str(v) for v in value)}")
            elif isinstance(value, (list, dict)):
                argv.append(f"{flag}={json.dumps(value)}")
            else:
                argv.append(f"{flag}={value}")
        return argv

    def run_batch(self, args):
        log = self.session.log
        if args.requests == "-":
            lines = self.stdin.read().splitlines()
        else:
            try:
                with open(args.requests, "r") as f:
                    lines = f.read().splitlines()
            except OSError as e:
                log.error(f"cannot read {args.requests}: {e}")
                print(f"fusiondescent: cannot read {args.requests}: {e}",
                      file=sys.stderr)
                return EXIT_USAGE

        for number, line in enumerate(lines, start=1):
            response = self.run_request(line)
            log.debug(f"batch line {number}: exit {response['exit_code']}")
            print(json.dumps(response, ensure_ascii=False), file=self.stdout)
        return EXIT_OK

    def run_request(self, line):
        if not line.strip():
            return {"subcommand": None, "exit_code": EXIT_USAGE,
                    **self.error_payload(InputError("empty request line"))}
        try:
            request = json.loads(line)
            command = request.get("subcommand") if isinstance(request, dict) else None
            argv = self.request_argv(request)
        except (ValueError, InputError) as e:
            return {"subcommand": None, "exit_code": EXIT_USAGE,
                    **self.error_payload(InputError(f"bad request: {e}"))}

        try:
            args = self.parse(argv)
        except SystemExit:
            # --help inside a request
            args = None
        if args is None:
            return {"subcommand": command, "exit_code": EXIT_USAGE,
                    **self.error_payload(InputError(
                        f"usage error in {' '.join(argv)}"))}
        code, payload = self.dispatch(args)
        if code == EXIT_OK:
            return {"subcommand": command, "exit_code": code, "result": payload}
        return {"subcommand": command, "exit_code": code, **payload}
