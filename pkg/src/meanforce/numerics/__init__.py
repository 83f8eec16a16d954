"""Quadrature and ODE integration helpers shared by the physics modules."""

from meanforce.numerics.integrator_config import IntegrationMethod, IntegratorConfig
from meanforce.numerics.quadrature import (
    DEFAULT_TOLERANCE,
    QuadratureResult,
    VectorQuadratureResult,
    integrate,
    integrate_vector,
    log_spaced_points,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "IntegrationMethod",
    "IntegratorConfig",
    "QuadratureResult",
    "VectorQuadratureResult",
    "integrate",
    "integrate_vector",
    "log_spaced_points",
]
