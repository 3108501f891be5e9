"""Exception types shared across the package."""


class GammaTiltError(Exception):
    """Base class for all package errors."""


class DomainError(GammaTiltError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PreconditionError(GammaTiltError, ValueError):
    """A structural requirement on the inputs is violated."""


class ModelError(GammaTiltError, ValueError):
    """The requested object cannot exist under the stated model."""


class QuadratureError(GammaTiltError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    Attributes
    ----------
    value : float
        Best available estimate.
    estimate : float
        Achieved absolute error estimate.
    """

    def __init__(self, message, value=float("nan"), estimate=float("nan")):
        super().__init__(message)
        self.value = value
        self.estimate = estimate


class SamplerError(GammaTiltError, RuntimeError):
    """A rejection sampler exhausted its proposal budget."""


class UnsupportedOperation(GammaTiltError, NotImplementedError):
    """The distribution handle does not expose the requested operation."""
