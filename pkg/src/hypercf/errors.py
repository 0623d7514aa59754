"""Exception hierarchy shared by all hypercf modules."""


class HypercfError(Exception):
    """Base class for all library errors."""


class NotPrimeError(HypercfError):
    """Field characteristic is not prime."""


class TooLargeError(HypercfError):
    """Requested field size exceeds the configured bound."""


class NotAPowerOfPError(HypercfError):
    """Frobenius exponent is not a power of the characteristic."""


class ZeroToPrecisionError(HypercfError):
    """A series is indistinguishable from zero at its known precision."""


class PrecisionExhaustedError(HypercfError):
    """Known precision cannot support the requested exact answer."""


class InsufficientLettersError(HypercfError):
    """A continued fraction cannot supply the requested partial quotients."""


class IdenticalPrefixError(HypercfError):
    """No disagreement between two continued fractions within the scan budget."""


class SharedValueError(HypercfError):
    """Disagreeing partial quotients unexpectedly coincide."""


class NotQuadraticError(HypercfError):
    """A periodic continued fraction collapsed to a rational or linear value."""


class InseparableError(HypercfError):
    """Operation requires a separable quadratic (distinct conjugate)."""


class SeedNotConvergentError(HypercfError):
    """Newton seed does not satisfy the ultrametric convergence condition."""


class DerivativeVanishesError(HypercfError):
    """Derivative is zero at the Newton seed to working precision."""


class HypothesisViolatedError(HypercfError):
    """Family parameters do not match the required parameter pattern."""


class ConditionFailedError(HypercfError):
    """An exact arithmetic condition fails; carries the exact margin."""

    def __init__(self, message, margin=None):
        super().__init__(message)
        self.margin = margin
