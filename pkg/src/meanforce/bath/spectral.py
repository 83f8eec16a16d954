"""Spectral density, thermal occupation and emission/absorption rates of the bath."""

from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from meanforce.bath.model_params import ModelParams
from meanforce.exceptions import MeanForceDomainError

FloatOrArray: TypeAlias = float | np.ndarray

COTH_SATURATION = 40.0


def _scalar_or_array(value: np.ndarray) -> FloatOrArray:
    return float(value) if value.ndim == 0 else value


def thermal_factor(omega: npt.ArrayLike, temperature: float) -> FloatOrArray:
    """Return ``coth(ω / 2T)`` for ``ω > 0``, saturating to one at large argument and at ``T = 0``."""
    omega = np.asarray(omega, dtype=float)
    if temperature == 0:
        return _scalar_or_array(np.ones_like(omega))
    x = omega / (2.0 * temperature)
    with np.errstate(divide="ignore"):
        value = np.where(x > COTH_SATURATION, 1.0, 1.0 / np.tanh(np.minimum(x, COTH_SATURATION)))
    return _scalar_or_array(value)


def spectral_density(omega: npt.ArrayLike, params: ModelParams) -> FloatOrArray:
    """Algebraic-Ohmic spectral density ``λω / (1 + (ω/Λ)²)``, odd in ω."""
    omega = np.asarray(omega, dtype=float)
    value = params.coupling * omega / (1.0 + (omega / params.cutoff) ** 2)
    return _scalar_or_array(value)


def bose_occupation(omega: npt.ArrayLike, temperature: float) -> FloatOrArray:
    """Bose-Einstein occupation ``1 / (exp(ω/T) - 1)``.

    At ``T = 0`` the occupation is 0 for positive and -1 for negative frequencies.

    Raises:
        MeanForceDomainError: If any frequency is zero.

    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega == 0):
        msg = "Bose occupation has a pole at ω = 0."
        raise MeanForceDomainError(msg)
    if temperature == 0:
        return _scalar_or_array(np.where(omega > 0, 0.0, -1.0))
    with np.errstate(over="ignore"):
        value = 1.0 / np.expm1(omega / temperature)
    return _scalar_or_array(value)


def spectral_coth(omega: npt.ArrayLike, params: ModelParams) -> FloatOrArray:
    """Even function ``J(ω) coth(ω/2T)``, with the finite limit ``2λT`` at ``ω = 0``."""
    omega = np.abs(np.asarray(omega, dtype=float))
    density = np.asarray(spectral_density(omega, params))
    if params.temperature == 0:
        return _scalar_or_array(density)
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.where(
            omega == 0,
            2.0 * params.coupling * params.temperature,
            density * np.asarray(thermal_factor(omega, params.temperature)),
        )
    return _scalar_or_array(value)


def decay_rate(omega: npt.ArrayLike, params: ModelParams) -> FloatOrArray:
    """Emission (``ω > 0``) or absorption (``ω < 0``) rate ``γ(ω) = 2J(ω)(1 + n(ω))``.

    Both branches are written without cancellation so that the detailed-balance ratio
    ``γ(-ω) = exp(-ω/T) γ(ω)`` holds to rounding.

    Raises:
        MeanForceDomainError: If any frequency is zero.

    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega == 0):
        msg = "Decay rate is undefined at ω = 0."
        raise MeanForceDomainError(msg)
    magnitude = np.abs(omega)
    density = 2.0 * np.asarray(spectral_density(magnitude, params))
    if params.temperature == 0:
        return _scalar_or_array(np.where(omega > 0, density, 0.0))
    x = magnitude / params.temperature
    with np.errstate(over="ignore", divide="ignore"):
        emission = -1.0 / np.expm1(-x)
        absorption = 1.0 / np.expm1(x)
    return _scalar_or_array(density * np.where(omega > 0, emission, absorption))
