"""Exception hierarchy shared by the library and the CLI."""


class GPDError(Exception):
    """Base class for all errors raised by :mod:`gpd`."""

    exit_code = 1


class InputError(GPDError, ValueError):
    """Malformed graph, vertex set or parameter."""

    exit_code = 2


class ParseError(InputError):
    """Edge-list text could not be parsed."""


class ConnectivityError(GPDError):
    """A connected graph was required but the input is disconnected."""

    exit_code = 3


class ResourceLimitError(GPDError):
    """A solver cap (vertex count, time limit, attempts) was exceeded."""

    exit_code = 4


class TimeLimitExceeded(ResourceLimitError):
    pass
