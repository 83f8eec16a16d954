"""Adaptive quadrature with an enforced error budget.

Wraps ``scipy.integrate.quad`` and ``scipy.integrate.quad_vec`` so that every
integral either meets its tolerance or raises ``QuadratureError`` carrying the
error estimate. Results are accepted when the estimated absolute error is at most
``tol * max(1, |value|)``.
"""

from collections.abc import Callable, Iterable
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate as scipy_integrate

from meanforce.exceptions import QuadratureError
from meanforce.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_TOLERANCE = 1e-8
DEFAULT_LIMIT = 500
DEFAULT_VECTOR_LIMIT = 20_000


class QuadratureResult(BaseModel):
    """Value of a scalar integral and its absolute error estimate."""

    model_config = ConfigDict(frozen=True)

    value: float
    error: float = Field(ge=0)

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        """Sum of two integrals over disjoint domains."""
        return QuadratureResult(value=self.value + other.value, error=self.error + other.error)

    def scaled(self, factor: float) -> "QuadratureResult":
        """Return the integral multiplied by a constant."""
        return QuadratureResult(value=self.value * factor, error=self.error * abs(factor))


class VectorQuadratureResult(BaseModel):
    """Values of a vector-valued integral and the max-norm error estimate."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray
    error: float = Field(ge=0)


def _interior_points(points: Iterable[float] | None, lower: float, upper: float) -> list[float]:
    if points is None or not (np.isfinite(lower) and np.isfinite(upper)):
        return []
    return sorted({float(p) for p in points if lower < p < upper})


def log_spaced_points(start: float, stop: float, per_decade: int = 2) -> list[float]:
    """Breakpoints ``start·10^(k/per_decade)``, ``k ≥ 0``, below ``stop``; empty unless ``0 < start < stop``."""
    if start <= 0 or stop <= start:
        return []
    count = int(np.floor(per_decade * np.log10(stop / start))) + 1
    return [float(p) for p in start * 10.0 ** (np.arange(count) / per_decade) if p < stop]


def integrate(  # noqa: PLR0913
    func: Callable[[float], float],
    lower: float,
    upper: float,
    *,
    tol: float = DEFAULT_TOLERANCE,
    points: Iterable[float] | None = None,
    weight: Literal["cos", "sin"] | None = None,
    wvar: float | None = None,
    limit: int = DEFAULT_LIMIT,
    label: str = "integral",
) -> QuadratureResult:
    """Integrate a scalar function adaptively.

    Args:
        func: Integrand.
        lower: Lower limit, may be ``-np.inf``.
        upper: Upper limit, may be ``np.inf``.
        tol: Absolute tolerance for O(1) values, relative tolerance for large ones.
        points: Breakpoints; only those strictly inside a finite interval are used.
        weight: Optional oscillatory weight ``cos(wvar*x)`` or ``sin(wvar*x)``.
        wvar: Angular frequency of the weight.
        limit: Maximum number of subintervals.
        label: Name used in diagnostics.

    Returns:
        The integral and its error estimate.

    Raises:
        QuadratureError: If the error estimate exceeds the budget or the value is not finite.

    """
    if lower == upper:
        return QuadratureResult(value=0.0, error=0.0)

    options: dict[str, object] = {"epsabs": tol, "epsrel": tol, "limit": limit, "full_output": 1}
    if weight is not None:
        options["weight"] = weight
        options["wvar"] = wvar
    else:
        interior = _interior_points(points, lower, upper)
        if interior:
            options["points"] = interior

    output = scipy_integrate.quad(func, lower, upper, **options)
    value, error = float(output[0]), float(output[1])
    message = output[3] if len(output) > 3 else None  # noqa: PLR2004

    if not np.isfinite(value) or error > tol * max(1.0, abs(value)):
        msg = (
            f"{label} on [{lower}, {upper}] did not converge: error estimate {error:.3e} "
            f"exceeds tolerance {tol:.1e} ({message or 'non-finite value'})"
        )
        raise QuadratureError(msg, estimate=error)
    if message is not None:
        logger.debug("%s on [%s, %s] accepted with warning: %s", label, lower, upper, message)
    return QuadratureResult(value=value, error=error)


def integrate_vector(  # noqa: PLR0913
    func: Callable[[float], np.ndarray],
    lower: float,
    upper: float,
    *,
    tol: float = DEFAULT_TOLERANCE,
    points: Iterable[float] | None = None,
    limit: int = DEFAULT_VECTOR_LIMIT,
    label: str = "vector integral",
) -> VectorQuadratureResult:
    """Integrate an array-valued function with one shared adaptive mesh.

    Args:
        func: Integrand returning an array of fixed shape.
        lower: Finite lower limit.
        upper: Finite upper limit.
        tol: Tolerance relative to ``max(1, max|values|)``.
        points: Breakpoints strictly inside the interval.
        limit: Maximum number of subintervals.
        label: Name used in diagnostics.

    Returns:
        The integral values and the max-norm error estimate.

    Raises:
        QuadratureError: If the error estimate exceeds the budget or any value is not finite.

    """
    interior = _interior_points(points, lower, upper)
    values, error, info = scipy_integrate.quad_vec(
        func,
        lower,
        upper,
        epsabs=tol,
        epsrel=tol,
        norm="max",
        limit=limit,
        points=interior or None,
        full_output=True,
    )
    values = np.asarray(values)
    scale = max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0
    if not np.all(np.isfinite(values)) or error > tol * scale:
        msg = (
            f"{label} on [{lower}, {upper}] did not converge after {info.intervals.shape[0]} intervals: "
            f"error estimate {error:.3e} exceeds tolerance {tol:.1e}"
        )
        raise QuadratureError(msg, estimate=float(error))
    if not info.success:
        logger.debug("%s accepted with status %s: %s", label, info.status, info.message)
    return VectorQuadratureResult(values=values, error=float(error))
