"""Bath coefficients entering the second-order master equations.

The one-sided Fourier transform of the bath correlation function at a Bohr frequency ω
splits into a rate ``γ(ω) = 2J(ω)(1 + n(ω))`` and a principal-value shift
``S(ω) = -𝓗[J(1 + n)](ω)``. The master equations only involve the combinations

    Δ  = γ(-ω) - γ(ω)        Σ  = -γ(-ω) - γ(ω)
    Σ′ = -S(-ω) - S(ω)       Δ′ = S(-ω) - S(ω)

with the closed forms ``Δ = -2J(ω)``, ``Σ = -2J(ω)coth(ω/2T)``,
``Σ′ = λΛ / (1 + (ω/Λ)²)`` and ``Δ′ = 𝓗[J coth](ω)``.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from meanforce.bath.hilbert import FAR_FIELD_FACTOR, hilbert_pv
from meanforce.bath.model_params import ModelParams
from meanforce.bath.spectral import decay_rate, spectral_coth, spectral_density
from meanforce.exceptions import QuadratureError
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE, integrate, log_spaced_points
from meanforce.utils.logging import get_logger

logger = get_logger(__name__)

CLOSED_FORM_RELATIVE_TOLERANCE = 1e-6


class BathCoefficients(BaseModel):
    """Rates and shifts of the bath evaluated at one Bohr frequency.

    Args:
        omega_bohr: Bohr frequency the coefficients are evaluated at.
        gamma_plus: Emission rate γ(ω).
        gamma_minus: Absorption rate γ(-ω).
        shift_plus: Principal-value shift S(ω).
        shift_minus: Principal-value shift S(-ω).
        delta: Δ = γ(-ω) - γ(ω).
        sigma: Σ = -γ(-ω) - γ(ω).
        sigma_prime: Σ′ = -S(-ω) - S(ω).
        delta_prime: Δ′ = S(-ω) - S(ω).
        reorganisation: λΛ of the bath.

    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    omega_bohr: float = Field(gt=0, description="Bohr frequency.")
    gamma_plus: float = Field(ge=0, description="Emission rate γ(ω).")
    gamma_minus: float = Field(ge=0, description="Absorption rate γ(-ω).")
    shift_plus: float = Field(description="Principal-value shift S(ω).")
    shift_minus: float = Field(description="Principal-value shift S(-ω).")
    delta: float = Field(le=0, description="γ(-ω) - γ(ω).")
    sigma: float = Field(le=0, description="-γ(-ω) - γ(ω).")
    sigma_prime: float = Field(description="-S(-ω) - S(ω).")
    delta_prime: float = Field(description="S(-ω) - S(ω).")
    reorganisation: float = Field(ge=0, description="Reorganisation λΛ.")

    @property
    def lamb_to_decay_ratio(self) -> float:
        """Size of the Lamb shift relative to the emission rate, ``|S(ω)| / γ(ω)``."""
        if self.gamma_plus == 0:
            return float("inf") if self.shift_plus else 0.0
        return abs(self.shift_plus) / self.gamma_plus

    def without_lamb_shift(self, *, keep_sigma_prime: bool = False) -> "BathCoefficients":
        """Return a copy with the principal-value terms set to zero.

        Args:
            keep_sigma_prime: Keep Σ′ and only drop Δ′.

        """
        sigma_prime = self.sigma_prime if keep_sigma_prime else 0.0
        return self.model_copy(
            update={"shift_plus": 0.0, "shift_minus": 0.0, "sigma_prime": sigma_prime, "delta_prime": 0.0},
        )


def reorganisation(params: ModelParams, *, numerical: bool = False, tol: float = DEFAULT_TOLERANCE) -> float:
    """Reorganisation ``λΛ = (2/π) ∫₀^∞ J(ω)/ω dω``.

    Args:
        params: Model parameters.
        numerical: Evaluate the defining integral instead of the closed form.
        tol: Quadrature tolerance when ``numerical`` is set.

    """
    if not numerical:
        return params.reorganisation
    if params.coupling == 0:
        return 0.0

    def integrand(omega: float) -> float:
        return params.coupling / (1.0 + (omega / params.cutoff) ** 2)

    head = integrate(integrand, 0.0, params.cutoff, tol=tol, label="reorganisation")
    tail = integrate(integrand, params.cutoff, np.inf, tol=tol, label="reorganisation tail")
    return 2.0 / np.pi * (head + tail).value


def _pv_window(omega: float, params: ModelParams) -> float:
    if omega == 0:
        return params.cutoff / 2.0
    return min(abs(omega), params.cutoff) / 2.0


def _pv_scale(omega: float, params: ModelParams) -> float:
    return max(params.cutoff, abs(omega), params.temperature)


def _pv_breakpoints(omega: float, params: ModelParams) -> tuple[float, ...]:
    """Zero, ±T and log-spaced points from ±Λ out past the far field of the transform."""
    far = abs(omega) + 2.0 * FAR_FIELD_FACTOR * _pv_scale(omega, params)
    positive = set(log_spaced_points(params.cutoff, far))
    if params.temperature > 0:
        positive.add(params.temperature)
    return (*sorted(-p for p in positive), 0.0, *sorted(positive))


def lamb_shift(omega: float, params: ModelParams, *, tol: float = DEFAULT_TOLERANCE) -> float:
    """Principal-value shift ``S(ω) = -𝓗[J(1 + n)](ω)``.

    ``J(ν)(1 + n(ν))`` is evaluated as ``½(J coth + J)``, which stays finite at ``ν = 0``.

    Raises:
        QuadratureError: If the transform misses its tolerance.

    """
    if params.coupling == 0:
        return 0.0

    def emission_spectrum(nu: float) -> float:
        return 0.5 * (spectral_coth(nu, params) + spectral_density(nu, params))

    result = hilbert_pv(
        emission_spectrum,
        omega,
        _pv_window(omega, params),
        tol=tol,
        scale=_pv_scale(omega, params),
        breakpoints=_pv_breakpoints(omega, params),
    )
    return -result.value


def coefficients(params: ModelParams, *, tol: float = DEFAULT_TOLERANCE) -> BathCoefficients:
    """Evaluate every bath coefficient at the Bohr frequency of ``params``.

    Raises:
        UnconfinedPotentialError: If the squared Bohr frequency is not positive.
        QuadratureError: If a transform misses its tolerance or Σ′ disagrees with its
            closed form.

    """
    omega = params.bohr_frequency
    if params.coupling == 0:
        return BathCoefficients(
            omega_bohr=omega,
            gamma_plus=0.0,
            gamma_minus=0.0,
            shift_plus=0.0,
            shift_minus=0.0,
            delta=0.0,
            sigma=0.0,
            sigma_prime=0.0,
            delta_prime=0.0,
            reorganisation=0.0,
        )

    gamma_plus = float(decay_rate(omega, params))
    gamma_minus = float(decay_rate(-omega, params))
    shift_plus = lamb_shift(omega, params, tol=tol)
    shift_minus = lamb_shift(-omega, params, tol=tol)
    sigma_prime = -shift_minus - shift_plus

    closed_form = params.reorganisation / (1.0 + (omega / params.cutoff) ** 2)
    deviation = abs(sigma_prime - closed_form)
    if deviation > max(100.0 * tol, CLOSED_FORM_RELATIVE_TOLERANCE * closed_form):
        msg = f"Σ′ = {sigma_prime:.12g} deviates from its closed form {closed_form:.12g} by {deviation:.3e}."
        raise QuadratureError(msg, estimate=deviation)

    result = BathCoefficients(
        omega_bohr=omega,
        gamma_plus=gamma_plus,
        gamma_minus=gamma_minus,
        shift_plus=shift_plus,
        shift_minus=shift_minus,
        delta=gamma_minus - gamma_plus,
        sigma=-gamma_minus - gamma_plus,
        sigma_prime=sigma_prime,
        delta_prime=shift_minus - shift_plus,
        reorganisation=params.reorganisation,
    )
    logger.debug(
        "Bath coefficients at ω=%.6g: Δ=%.6g Σ=%.6g Σ′=%.6g Δ′=%.6g",
        omega,
        result.delta,
        result.sigma,
        result.sigma_prime,
        result.delta_prime,
    )
    return result
