"""Bloch-Redfield and secular GKLS master equations for the oscillator moments."""

from meanforce.master_equations.evolution import evolve, propagate_exactly
from meanforce.master_equations.generators import (
    CorrectionHamiltonian,
    LinearGenerator,
    correction_hamiltonian,
    generator_for,
    gkls_generator,
    gkls_rhs,
    redfield_generator,
    redfield_rhs,
)
from meanforce.master_equations.moments import MomentState, Trajectory, validate_time_grid
from meanforce.master_equations.steady_state import steady_state

__all__ = [
    "CorrectionHamiltonian",
    "LinearGenerator",
    "MomentState",
    "Trajectory",
    "correction_hamiltonian",
    "evolve",
    "generator_for",
    "gkls_generator",
    "gkls_rhs",
    "propagate_exactly",
    "redfield_generator",
    "redfield_rhs",
    "steady_state",
    "validate_time_grid",
]
