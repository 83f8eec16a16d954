"""Analytic fixed points of the master equations."""

import numpy as np

from meanforce.bath.coefficients import BathCoefficients, coefficients
from meanforce.bath.model_params import ModelParams
from meanforce.bath.spectral import thermal_factor
from meanforce.exceptions import UnstableModelError
from meanforce.gaussian.reference_states import thermal_state
from meanforce.gaussian.state import GaussianState
from meanforce.master_equations.generators import generator_for
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE


def steady_state(
    variant: ModelParams,
    *,
    coeffs: BathCoefficients | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> GaussianState:
    """Steady state of the master equation selected by ``variant``.

    The secular equation, and the non-secular one without Lamb shift, relax to the
    Gibbs state at the Bohr frequency. The non-secular equation with Lamb shift relaxes to

        ⟨x²⟩ = ω / (2(ω² - Σ′)) · (coth(ω/2T) - Δ′/ω²),    ⟨p²⟩ = (ω/2) coth(ω/2T).

    Raises:
        UnconfinedPotentialError: If the squared Bohr frequency is not positive.
        UnstableModelError: If the generator is not Hurwitz.

    """
    omega_sq = variant.bohr_frequency_sq
    if variant.coupling == 0:
        return thermal_state(omega_sq, variant.temperature)

    coeffs = coeffs if coeffs is not None else coefficients(variant, tol=tol)
    generator = generator_for(variant, coeffs)
    if not generator.is_hurwitz:
        worst = float(np.max(generator.eigenvalues().real))
        msg = (
            f"{generator.label} generator at ω²={omega_sq:.6g} is unstable "
            f"(largest eigenvalue real part {worst:.3e}, Σ′={coeffs.sigma_prime:.6g})."
        )
        raise UnstableModelError(msg)

    if variant.secular or not variant.lamb_shift:
        return thermal_state(omega_sq, variant.temperature)

    omega = float(np.sqrt(omega_sq))
    factor = float(thermal_factor(omega, variant.temperature))
    xx = omega / (2.0 * (omega_sq - coeffs.sigma_prime)) * (factor - coeffs.delta_prime / omega_sq)
    if xx <= 0:
        msg = f"Redfield steady state has a non-positive position variance {xx:.6g}."
        raise UnstableModelError(msg)
    return GaussianState(xx=xx, pp=omega * factor / 2.0)
