"""Symmetrised noise of the bath force."""

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict
from scipy import special

from meanforce.bath.model_params import ModelParams
from meanforce.bath.spectral import FloatOrArray, spectral_coth, spectral_density
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE, integrate

ASYMPTOTIC_ARGUMENT = 500.0
THERMAL_CUTOFF_FACTOR = 60.0


class NoiseSpectrum(BaseModel):
    """Noise spectrum ``ν(ω) = (2/π) J(ω) coth(ω/2T)``, even in ω and finite at 0."""

    model_config = ConfigDict(frozen=True)

    params: ModelParams

    def __call__(self, omega: npt.ArrayLike) -> FloatOrArray:
        """Evaluate ν."""
        return 2.0 / np.pi * spectral_coth(omega, self.params)

    @property
    def zero_frequency_limit(self) -> float:
        """Value ``4λT/π`` at ω = 0."""
        return 4.0 * self.params.coupling * self.params.temperature / np.pi

    @property
    def high_frequency_amplitude(self) -> float:
        """Coefficient ``a`` of the asymptote ``ν(ω) ≈ a / ω``."""
        return 2.0 / np.pi * self.params.coupling * self.params.cutoff**2


def _vacuum_profile(x: float) -> float:
    """``½[eˣ E₁(x) - e⁻ˣ Ei(x)] = ∫₀^∞ cos(xu) u / (1 + u²) du`` for ``x > 0``."""
    if x > ASYMPTOTIC_ARGUMENT:
        inverse_sq = 1.0 / x**2
        return -inverse_sq * (1.0 + inverse_sq * (6.0 + 120.0 * inverse_sq))
    return 0.5 * (np.exp(x) * special.exp1(x) - np.exp(-x) * special.expi(x))


def noise_kernel(params: ModelParams, tau: float, *, tol: float = DEFAULT_TOLERANCE) -> float:
    """Symmetrised force correlation ``μ(τ) = ∫₀^∞ ν(ω) cos(ωτ) dω``.

    The zero-temperature part has a closed form in exponential integrals; the thermal
    part ``(2/π) ∫ 2J(ω) n(ω) cos(ωτ) dω`` is a cosine-weighted quadrature. μ diverges
    logarithmically at ``τ = 0``, where +inf is returned.

    Raises:
        QuadratureError: If the thermal part misses its tolerance.

    """
    if params.coupling == 0:
        return 0.0
    if tau == 0:
        return float("inf")
    tau = abs(tau)
    vacuum = 2.0 / np.pi * params.coupling * params.cutoff**2 * _vacuum_profile(params.cutoff * tau)
    if params.temperature == 0:
        return float(vacuum)

    def thermal_excess(omega: float) -> float:
        return spectral_coth(omega, params) - spectral_density(omega, params)

    thermal = integrate(
        thermal_excess,
        0.0,
        THERMAL_CUTOFF_FACTOR * params.temperature,
        tol=tol,
        weight="cos",
        wvar=tau,
        label="thermal noise kernel",
    )
    return float(vacuum + 2.0 / np.pi * thermal.value)


def dissipation_kernel(params: ModelParams, t: npt.ArrayLike) -> FloatOrArray:
    """Memory kernel ``χ(t) = λΛ² exp(-Λt)`` of the Langevin equation, the inverse Laplace transform of χ̂."""
    times = np.asarray(t, dtype=float)
    value = params.coupling * params.cutoff**2 * np.exp(-params.cutoff * times)
    return float(value) if value.ndim == 0 else value
