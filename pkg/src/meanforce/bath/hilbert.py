"""Principal-value Hilbert transform on the real line."""

from collections.abc import Callable, Iterable

import numpy as np

from meanforce.exceptions import MeanForceValidationError
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE, QuadratureResult, integrate

FAR_FIELD_FACTOR = 50.0


def hilbert_pv(  # noqa: PLR0913
    func: Callable[[float], float],
    omega0: float,
    window: float,
    *,
    tol: float = DEFAULT_TOLERANCE,
    scale: float | None = None,
    breakpoints: Iterable[float] = (),
) -> QuadratureResult:
    """Evaluate ``(1/π) PV ∫ f(ν) / (ν - ω₀) dν`` over the real line.

    The symmetric window ``[ω₀ - a, ω₀ + a]`` around the pole is folded onto
    ``(0, a]``, where ``(f(ω₀ + u) - f(ω₀ - u)) / u`` is regular. Outside the window the
    integrand is integrated adaptively up to ``ω₀ ± 50·scale`` and on semi-infinite
    intervals beyond, so ``f`` must decay at least like ``1/ν``.

    Args:
        func: Integrand, smooth in a neighbourhood of ``omega0``.
        omega0: Position of the pole.
        window: Half-width ``a`` of the folded window.
        tol: Tolerance of each piece, relative to ``max(1, |piece|)``.
        scale: Characteristic scale of ``func``. Defaults to ``max(|ω₀|, a)``.
        breakpoints: Kinks or peaks of ``func`` outside the window.

    Returns:
        The transform and its accumulated error estimate.

    Raises:
        MeanForceValidationError: If the window is not positive.
        QuadratureError: If any piece misses its tolerance.

    """
    if window <= 0:
        msg = f"Principal-value window must be positive, got {window}."
        raise MeanForceValidationError(msg)

    far = max(FAR_FIELD_FACTOR * (scale if scale is not None else max(abs(omega0), window)), 2.0 * window)
    points = tuple(breakpoints)

    def folded(u: float) -> float:
        return (func(omega0 + u) - func(omega0 - u)) / u

    def exterior(nu: float) -> float:
        return func(nu) / (nu - omega0)

    pieces = (
        integrate(folded, 0.0, window, tol=tol, label="folded principal-value window"),
        integrate(exterior, omega0 + window, omega0 + far, tol=tol, points=points, label="right exterior"),
        integrate(exterior, omega0 + far, np.inf, tol=tol, label="right tail"),
        integrate(exterior, omega0 - far, omega0 - window, tol=tol, points=points, label="left exterior"),
        integrate(exterior, -np.inf, omega0 - far, tol=tol, label="left tail"),
    )
    total = sum(pieces, start=QuadratureResult(value=0.0, error=0.0))
    return total.scaled(1.0 / np.pi)
