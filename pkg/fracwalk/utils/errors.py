"""Custom exception hierarchy for fracwalk.

Every error raised by the library derives from FracWalkError. Each class
carries the process exit code the command line maps it to, so the CLI can
translate any failure into a machine-readable error document without a
lookup table.
"""

from __future__ import annotations


class FracWalkError(Exception):
    """Base exception for all fracwalk errors.

    Attributes:
        message: Human-readable error description.
        details: Optional dictionary containing additional error context.
        exit_code: Process exit code used by the command line.
    """

    exit_code: int = 1

    def __init__(self, message: str, details: dict[str, object] | None = None) -> None:
        """Initialize the exception.

        Args:
            message: Human-readable error description.
            details: Optional dictionary containing additional error context.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        """Return string representation of the error."""
        if self.details:
            return f"{self.message} | Details: {self.details}"
        return self.message


# =============================================================================
# Configuration Errors (exit code 2)
# =============================================================================


class ConfigError(FracWalkError):
    """Exception raised for malformed or out-of-range configuration.

    Attributes:
        field: The configuration key that failed validation, if known.
    """

    exit_code = 2

    def __init__(
        self,
        message: str,
        field: str | None = None,
        details: dict[str, object] | None = None,
    ) -> None:
        """Initialize the configuration error.

        Args:
            message: Human-readable error description.
            field: The configuration key that failed validation.
            details: Optional dictionary containing additional error context.
        """
        super().__init__(message, details)
        self.field = field


class HypothesisError(ConfigError):
    """Exception raised when parameters violate a limit theorem's hypotheses.

    Examples:
        - Theorem 1 with alpha outside (0, 1)
        - Theorem 2 with p != q
        - Skew weights whose sum is not one

    Attributes:
        hypothesis: Short statement of the violated hypothesis.
    """

    def __init__(
        self,
        message: str,
        hypothesis: str,
        field: str | None = None,
        details: dict[str, object] | None = None,
    ) -> None:
        super().__init__(message, field=field, details=details)
        self.hypothesis = hypothesis


# =============================================================================
# Numerical Errors (exit code 3)
# =============================================================================


class NumericalError(FracWalkError):
    """Base class for failures of a numerical routine."""

    exit_code = 3


class QuadratureError(NumericalError):
    """Exception raised when adaptive quadrature fails to converge.

    Attributes:
        estimate: Best value reached before giving up.
        error_bound: Error estimate attached to that value.
    """

    def __init__(
        self,
        message: str,
        estimate: float,
        error_bound: float,
        details: dict[str, object] | None = None,
    ) -> None:
        """Initialize the quadrature error.

        Args:
            message: Human-readable error description.
            estimate: Best value reached before giving up.
            error_bound: Error estimate attached to that value.
            details: Optional dictionary containing additional error context.
        """
        super().__init__(message, details)
        self.estimate = estimate
        self.error_bound = error_bound


class DivergenceError(NumericalError):
    """Exception raised when an integrand is not integrable at its singularity.

    Raised when a supposed second difference fails the O(y^2) probe near
    the origin, or when a kernel has no finite mean for a compensated form.
    """

    pass


class PoleError(NumericalError):
    """Exception raised when the gamma function is evaluated at a pole."""

    pass


class DomainError(NumericalError):
    """Exception raised for arguments outside an operation's domain.

    Examples:
        - Tail bound requested below 10 * sqrt(gamma)
        - Dimension above the supported cap
        - Riesz derivative of order exactly one
    """

    pass


class PoissonOverflowError(NumericalError):
    """Exception raised when a walk's Poisson mean exceeds the configured cap.

    Attributes:
        mean: The requested Poisson mean lambda * t / gamma**alpha.
        cap: The configured maximum.
    """

    def __init__(
        self,
        message: str,
        mean: float,
        cap: float,
        details: dict[str, object] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.mean = mean
        self.cap = cap


class EmptyBatchError(NumericalError):
    """Exception raised when a statistic is requested on an empty batch."""

    pass


class ShapeMismatchError(NumericalError):
    """Exception raised when paired arrays do not share a grid."""

    pass


# =============================================================================
# Statistical Acceptance (exit code 4)
# =============================================================================


class AcceptanceError(FracWalkError):
    """Exception raised when a statistical acceptance check fails.

    Attributes:
        checks: Names of the failing checks.
    """

    exit_code = 4

    def __init__(
        self,
        message: str,
        checks: list[str] | None = None,
        details: dict[str, object] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.checks = checks or []


# =============================================================================
# Warnings
# =============================================================================


class GridExtentWarning(UserWarning):
    """Warning issued when a grid truncates non-negligible mass."""


__all__ = [
    "FracWalkError",
    "ConfigError",
    "HypothesisError",
    "NumericalError",
    "QuadratureError",
    "DivergenceError",
    "PoleError",
    "DomainError",
    "PoissonOverflowError",
    "EmptyBatchError",
    "ShapeMismatchError",
    "AcceptanceError",
    "GridExtentWarning",
]
