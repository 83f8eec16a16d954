"""Gaussian states, thermal references and fidelity."""

from meanforce.gaussian.fidelity import fidelity
from meanforce.gaussian.reference_states import mean_force_classical, thermal_state
from meanforce.gaussian.state import GaussianState, PhysicalityCheck, is_physical

__all__ = [
    "GaussianState",
    "PhysicalityCheck",
    "fidelity",
    "is_physical",
    "mean_force_classical",
    "thermal_state",
]
