# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)

# standard imports
import json
import logging
import logging.handlers
import os

# local imports
from fusiondescent.cohomology import CAP_ENVIRONMENT_VARIABLE, DEFAULT_CAP
from fusiondescent.errors import InputError


DEFAULTS = {
    "log_level": "WARNING",
    "log_file": None,
    "cohomology_cap": DEFAULT_CAP,
    "fp_tolerance": 1e-12,
    "fp_max_iterations": 100000,
}

# computational limits come from the command line and the environment only
FILE_KEYS = ("log_level", "log_file")


def load_config(config_file=None, overrides=None):
    """
    Build the configuration dict: built-in defaults, then the optional
    JSON config file (logging keys only), then the environment, then
    command line overrides (None values in ``overrides`` are ignored).
    """
    config = dict(DEFAULTS)
    if config_file:
        try:
            with open(config_file, "r") as f:
                loaded = json.load(f)
        except (OSError, ValueError) as e:
            raise InputError(f"cannot read config file {config_file}: {e}") from None
        if not isinstance(loaded, dict):
            raise InputError(f"config file {config_file} must hold an object")
        unknown = sorted(set(loaded) - set(FILE_KEYS))
        if unknown:
            raise InputError(f"config file may only set {', '.join(FILE_KEYS)}; "
                             f"got {', '.join(unknown)}")
        config.update(loaded)

    env_cap = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
    if env_cap is not None:
        config["cohomology_cap"] = env_cap

    for key, value in (overrides or {}).items():
        if value is not None:
            config[key] = value

    try:
        config["cohomology_cap"] = int(config["cohomology_cap"])
        config["fp_tolerance"] = float(config["fp_tolerance"])
        config["fp_max_iterations"] = int(config["fp_max_iterations"])
    except (TypeError, ValueError) as e:
        raise InputError(f"bad configuration value: {e}") from None
    if config["cohomology_cap"] < 1:
        raise InputError("cohomology_cap must be positive")
    return config


class Session:
    """
    Holds the configuration and the logger shared by every plugin for
    one invocation of the command line.
    """

    def __init__(self, config):
        self.config = config
        self.cap = config["cohomology_cap"]
        self.fp_tolerance = config["fp_tolerance"]
        self.fp_max_iterations = config["fp_max_iterations"]
        # Initialize logger
        self.log = self.get_logger()

    def get_logger(self):
        """
        Create the logger used for messages from the library and the
        runner. The verbosity is taken from the 'log_level' setting;
        messages go to 'log_file' when set, otherwise to stderr.
        """
        level = logging.getLevelName(str(self.config["log_level"]).upper())
        if not isinstance(level, int):
            raise InputError(f"unknown log level '{self.config['log_level']}'")
        log = logging.getLogger()
        log.setLevel(level)
        formatter = logging.Formatter(
            "%(asctime)s %(levelname)-8s %(message)s",
            datefmt='%Y-%m-%d %H:%M:%S')
        if self.config["log_file"]:
            handler = logging.handlers.RotatingFileHandler(
                self.config["log_file"], maxBytes=500000, backupCount=3)
        else:
            handler = logging.StreamHandler()
        if (log.hasHandlers()):
            log.handlers.clear()
        handler.setFormatter(formatter)
        log.addHandler(handler)
        return log
