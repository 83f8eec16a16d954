"""Bath model: parameters, spectral functions and master-equation coefficients."""

from meanforce.bath.coefficients import BathCoefficients, coefficients, lamb_shift, reorganisation
from meanforce.bath.hilbert import hilbert_pv
from meanforce.bath.model_params import ModelParams
from meanforce.bath.spectral import (
    bose_occupation,
    decay_rate,
    spectral_coth,
    spectral_density,
    thermal_factor,
)

__all__ = [
    "BathCoefficients",
    "ModelParams",
    "bose_occupation",
    "coefficients",
    "decay_rate",
    "hilbert_pv",
    "lamb_shift",
    "reorganisation",
    "spectral_coth",
    "spectral_density",
    "thermal_factor",
]
