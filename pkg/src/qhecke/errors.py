"""Exception types shared across the package."""


class QHeckeError(Exception):
    """Base class for all package errors."""


class EmptyWindow(QHeckeError):
    """An operation produced (or was given) a series window with no slots."""


class NotInvertible(QHeckeError):
    """Series inversion requires a nonzero coefficient at the window's lo."""


class OutOfWindow(QHeckeError):
    """Coefficient requested at or beyond the precision bound."""


class NonIntegralValuation(QHeckeError):
    """Eta-quotient whose aggregate q-power shift is not an integer."""


class UnknownPair(QHeckeError):
    """(weight, level) pair is not one of the 16 catalogued spaces."""


class PrefixMismatch(QHeckeError):
    """A catalog recipe expansion disagrees with its reference prefix."""


class NotADivisor(QHeckeError):
    """Cusp parameter d must divide the level."""


class NotPrime(QHeckeError):
    """Hecke operators here are indexed by prime powers only."""


class PrecisionExhausted(QHeckeError):
    """The available window is too small to certify the requested object."""


class IntegralityViolation(QHeckeError):
    """A constructed basis element has a non-integer coefficient."""


class IndexOutOfRange(QHeckeError):
    """Recurrence coefficient index outside 0 <= j <= floor(m/2)."""
