"""Thermal reference states of the oscillator."""

import numpy as np

from meanforce.bath.model_params import ModelParams
from meanforce.bath.spectral import thermal_factor
from meanforce.exceptions import UnconfinedPotentialError
from meanforce.gaussian.state import GaussianState


def thermal_state(omega_sq: float, temperature: float) -> GaussianState:
    """Gibbs state of ``H = p²/2 + ω² x²/2`` at the given temperature.

    ``⟨x²⟩ = coth(ω/2T) / 2ω`` and ``⟨p²⟩ = ω coth(ω/2T) / 2``; at ``T = 0`` this is the
    ground state.

    Raises:
        UnconfinedPotentialError: If ``omega_sq`` is not positive.

    """
    if omega_sq <= 0:
        msg = f"Thermal state needs a confining potential, got ω² = {omega_sq:.6g}."
        raise UnconfinedPotentialError(msg)
    omega = float(np.sqrt(omega_sq))
    factor = float(thermal_factor(omega, temperature))
    return GaussianState(xx=factor / (2.0 * omega), pp=omega * factor / 2.0)


def mean_force_classical(params: ModelParams) -> GaussianState:
    """Thermal state of the classical mean-force Hamiltonian, with ``λΛ`` removed from ω².

    This is the weak-coupling limit of the reduced steady state of the exact model.

    Raises:
        UnconfinedPotentialError: If the mean-force potential does not confine.

    """
    return thermal_state(params.mean_force_frequency_sq, params.temperature)
