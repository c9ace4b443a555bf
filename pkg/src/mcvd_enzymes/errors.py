"""Exception hierarchy.

Every error carries a short ``category`` string; the command line prints it
as the first token of its one-line failure message.
"""


class McvdError(Exception):
    category = "error"


class DomainError(McvdError, ValueError):
    """An argument lies outside the domain of a function."""

    category = "domain"


class GeometryError(McvdError, ValueError):
    category = "geometry"


class ConfigError(McvdError, ValueError):
    category = "config"


class UndefinedMetricError(McvdError, ArithmeticError):
    """A metric is undefined for the given data (e.g. no hits at all)."""

    category = "metric"


class FitError(McvdError, ValueError):
    category = "fit"


class QuadratureError(McvdError, ArithmeticError):
    category = "numeric"
