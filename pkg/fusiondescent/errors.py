# -*- coding: utf-8 -*-
# Distributed under the MIT License (https://opensource.org/licenses/MIT)


class FusionDescentError(Exception):
    """
    Base class for every error raised by the library. The runner maps
    each subclass to a process exit code through ``exit_code``.
    """
    exit_code = 1


class InputError(FusionDescentError):
    exit_code = 2


class StructureError(InputError):
    """Raised when tensor or cochain dimensions disagree with the rank."""


class UnsupportedFieldError(FusionDescentError):
    exit_code = 3


class ResourceCapError(FusionDescentError):
    exit_code = 4
