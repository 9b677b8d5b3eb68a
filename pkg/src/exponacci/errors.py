"""Exception hierarchy.

Every error raised by the library derives from :class:`ExponacciError`, which
is itself a :class:`ValueError` so that callers treating bad parameters
generically keep working.
"""


class ExponacciError(ValueError):
    """Base class for all library errors."""


class NonPositiveDiscriminant(ExponacciError):
    """a^2 + 4b <= 0: the characteristic roots are not real and distinct."""


class DegenerateExponentialBase(ExponacciError):
    """d coincides (numerically) with a characteristic root."""


class UndefinedNegativePower(ExponacciError):
    """A negative index was requested with d = 0 and c != 0."""


class ZeroB(ExponacciError):
    """b = 0 where a division by b is required (negative indices)."""


class DegenerateDenominator(ExponacciError):
    """A closed-form summation denominator vanishes."""


class ZeroGamma(ExponacciError):
    """The dominant magnitude is zero, so no asymptotic slope exists."""


class NotOutwinding(ExponacciError):
    """The operation requires an outwinding spiral (gamma > 1)."""


class NotInwinding(ExponacciError):
    """The operation requires an inwinding spiral (gamma < 1)."""


class ZeroDenominator(ExponacciError):
    """An ellipticity ratio has a zero denominator."""


class NegativeBase(ExponacciError):
    """A real power of a non-positive base would be required."""
