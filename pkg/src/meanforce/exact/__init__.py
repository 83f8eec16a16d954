"""Exact Gaussian dynamics from the quantum Langevin equation."""

from meanforce.exact.covariances import (
    TRANSIENT_TOLERANCE,
    memory_integral,
    memory_integral_time_domain,
    propagator_for,
    steady_covariance,
    transient_covariance,
)
from meanforce.exact.noise import NoiseSpectrum, dissipation_kernel, noise_kernel
from meanforce.exact.propagator import Propagator, characteristic_roots, g_hat, g_of_t

__all__ = [
    "TRANSIENT_TOLERANCE",
    "NoiseSpectrum",
    "Propagator",
    "characteristic_roots",
    "dissipation_kernel",
    "g_hat",
    "g_of_t",
    "memory_integral",
    "memory_integral_time_domain",
    "noise_kernel",
    "propagator_for",
    "steady_covariance",
    "transient_covariance",
]
