"""Exception hierarchy shared by every agflag module."""


class AgflagError(Exception):
    """Base class for all library errors."""


class SpecMismatch(AgflagError):
    pass


class DivisionByZero(AgflagError, ZeroDivisionError):
    pass


class ZeroInput(AgflagError, ValueError):
    pass


class ConfigError(AgflagError, ValueError):
    """Malformed field or curve configuration."""


class GcdViolation(ConfigError):
    pass


class DegreeRange(ConfigError):
    pass


class NotSeparable(ConfigError):
    pass


class KummerConditionFailed(ConfigError):
    pass


class RangeError(AgflagError, ValueError):
    pass


class NotGaloisInvariant(AgflagError, ValueError):
    pass


class PoleAtEvaluationPoint(AgflagError, ArithmeticError):
    pass


class PreconditionViolated(AgflagError, ValueError):
    pass


class CardinalityMismatch(AgflagError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class RouteDisagreement(AgflagError, AssertionError):
    """Two computations that must coincide returned different answers."""


class ArityMismatch(AgflagError, ValueError):
    pass


class SupportOverlap(AgflagError, ValueError):
    pass


class TooLarge(AgflagError, ValueError):
    pass


class Inconclusive(AgflagError):
    """Randomized search exhausted without a witness; not a proof of absence."""


class NotIsoDualFlag(AgflagError, ValueError):
    pass
