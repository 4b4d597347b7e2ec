"""Exception taxonomy for the esdispersion package.

Every error raised on purpose by this package derives from
:class:`EsDispersionError`, so callers can catch the package's failures
without masking unrelated bugs.
"""


class EsDispersionError(Exception):
    """Base class for all package-specific errors."""


class DomainError(EsDispersionError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class QuadratureError(EsDispersionError, RuntimeError):
    """An adaptive quadrature failed to converge within its budget."""


class UnresolvedWindingError(QuadratureError):
    """Angle refinement exhausted its budget before resolving the winding."""


class SingularCoefficientError(EsDispersionError):
    """The boundary ratio hit a vanishing denominator."""


class DegeneratePointError(EsDispersionError):
    """The squared boundary modulus vanished where it must be positive."""


class ThresholdAmbiguousError(EsDispersionError):
    """The index cannot be stated cleanly near the critical frequency."""


class IndexMismatchError(ThresholdAmbiguousError):
    """Winding number and critical-frequency threshold disagree on the index.

    This happens in a narrow frequency band: the threshold rule uses the
    maximum of the real root curve, while the winding transition sits
    slightly above it, so between the two the rules disagree and the
    index is reported as ambiguous rather than resolved silently.
    """


class NoDiscreteSpectrumError(EsDispersionError):
    """Zero extraction was requested where the index is zero."""


class ZeroAtInfinityError(EsDispersionError):
    """Zero extraction was requested at omega = 0, where the zero pair
    escapes to the point at infinity."""


class NotAZeroError(EsDispersionError):
    """A spectral parameter failed the zero residual check."""


class NonDecayingModeError(EsDispersionError):
    """The requested mode grows with distance from the wall."""


class OverflowGuardError(EsDispersionError):
    """An exponential argument left the safe range."""
