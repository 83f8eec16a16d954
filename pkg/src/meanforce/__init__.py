"""meanforce - numerical laboratory for the damped quantum harmonic oscillator.

This package compares Bloch-Redfield and secular GKLS master equations with the exact
Gaussian dynamics of an oscillator coupled to a bosonic bath, and measures how close
their steady states come to the mean-force Gibbs state.

"""

from importlib.metadata import version

from meanforce.bath.coefficients import BathCoefficients
from meanforce.bath.model_params import ModelParams
from meanforce.gaussian.state import GaussianState
from meanforce.master_equations.moments import MomentState, Trajectory
from meanforce.numerics.integrator_config import IntegratorConfig
from meanforce.oscillator import DampedOscillator
from meanforce.variants import Method, VariantSpec

__version__ = version("meanforce")

__all__ = [
    "BathCoefficients",
    "DampedOscillator",
    "GaussianState",
    "IntegratorConfig",
    "Method",
    "ModelParams",
    "MomentState",
    "Trajectory",
    "VariantSpec",
]
