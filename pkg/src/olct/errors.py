"""Exception hierarchy for the olct package.

Every numeric-domain failure raises a subclass of :class:`OlctError`, so
callers (and the CLI) can distinguish domain errors from I/O or usage
errors with a single except clause.
"""


class OlctError(Exception):
    """Base class for all olct domain errors."""


class SymplecticViolation(OlctError):
    """Parameter matrix does not satisfy ad - bc = 1."""


class NegativeB(OlctError):
    """The scale parameter b is negative."""


class DegenerateParams(OlctError):
    """Parameters are outside the domain of the requested engine."""


class GridNotPow2(OlctError):
    """The fast transform requires a power-of-two sample count."""


class DomainError(OlctError):
    """Special-function argument outside the supported domain."""


class LambdaOutOfRange(OlctError):
    """Pitt exponent must satisfy 0 <= lambda < 1."""


class ZeroSignal(OlctError):
    """Operation undefined for the identically-zero signal."""


class GridContainsZero(OlctError):
    """Singular integrand evaluated on a grid containing coordinate 0."""


class NotNormalized(OlctError):
    """Signal must have unit L2 norm for this check."""


class BadSpec(OlctError):
    """Malformed signal generation spec."""
