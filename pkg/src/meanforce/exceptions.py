"""Custom exceptions for the meanforce library."""


class MeanForceError(Exception):
    """Base exception for the meanforce library."""


class MeanForceValidationError(MeanForceError):
    """Raised when input validation fails."""


class MeanForceConfigError(MeanForceValidationError):
    """Raised when a run configuration cannot be read or is inconsistent."""


class MeanForceDomainError(MeanForceError):
    """Raised when an input lies outside the domain of an operation."""


class UnconfinedPotentialError(MeanForceDomainError):
    """Raised when a squared trap frequency is not positive."""


class MeanForceNumericalError(MeanForceError):
    """Base class for numerical failures."""


class QuadratureError(MeanForceNumericalError):
    """Raised when an adaptive quadrature misses its error budget."""

    def __init__(self, message: str, estimate: float) -> None:
        """Store the absolute error estimate of the failed quadrature.

        Args:
            message: Human readable description.
            estimate: Absolute error estimate returned by the quadrature routine.
        """
        super().__init__(message)
        self.estimate = estimate


class IntegrationError(MeanForceNumericalError):
    """Raised when the ODE integrator gives up."""

    def __init__(self, message: str, last_time: float) -> None:
        """Store the last time reached before the failure.

        Args:
            message: Human readable description.
            last_time: Last time at which the solution was still accepted.
        """
        super().__init__(message)
        self.last_time = last_time


class UnstableModelError(MeanForceNumericalError):
    """Raised when the exact model or a master-equation variant has no stable steady state."""


class DegenerateRootsError(MeanForceNumericalError):
    """Raised when the characteristic cubic has repeated roots."""
