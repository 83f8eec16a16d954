"""Affine generators of the moment equations.

Both master equations are quadratic in ``x`` and ``p``, so the raw moments
``y = (⟨x⟩, ⟨p⟩, ⟨x²⟩, ⟨p²⟩, ⟨{x, p}⟩)`` obey a closed affine system
``dy/dt = M y + b`` with a 2x2 block for the first moments and a 3x3 block for the
second moments.
"""

from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from meanforce.bath.coefficients import BathCoefficients
from meanforce.bath.model_params import ModelParams
from meanforce.exceptions import MeanForceValidationError, UnconfinedPotentialError
from meanforce.master_equations.moments import MomentState


class LinearGenerator(BaseModel):
    """Affine moment generator.

    Args:
        first_order: 2x2 matrix acting on ``(⟨x⟩, ⟨p⟩)``.
        second_order: 3x3 matrix acting on ``(⟨x²⟩, ⟨p²⟩, ⟨{x, p}⟩)``.
        inhomogeneity: Constant drive of the second moments.
        label: Name of the master equation.

    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    first_order: np.ndarray
    second_order: np.ndarray
    inhomogeneity: np.ndarray
    label: str = Field(default="generator")

    @model_validator(mode="after")
    def _validate_shapes(self) -> Self:
        shapes = (self.first_order.shape, self.second_order.shape, self.inhomogeneity.shape)
        if shapes != ((2, 2), (3, 3), (3,)):
            msg = f"Generator blocks must have shapes (2, 2), (3, 3), (3,), got {shapes}."
            raise MeanForceValidationError(msg)
        return self

    @property
    def matrix(self) -> np.ndarray:
        """Full 5x5 matrix ``M``."""
        matrix = np.zeros((5, 5))
        matrix[:2, :2] = self.first_order
        matrix[2:, 2:] = self.second_order
        return matrix

    @property
    def offset(self) -> np.ndarray:
        """Full length-5 drive ``b``."""
        return np.concatenate([np.zeros(2), self.inhomogeneity])

    @property
    def augmented(self) -> np.ndarray:
        """6x6 matrix whose exponential propagates ``(y, 1)``."""
        augmented = np.zeros((6, 6))
        augmented[:5, :5] = self.matrix
        augmented[:5, 5] = self.offset
        return augmented

    def __call__(self, _t: float, vector: np.ndarray) -> np.ndarray:
        """Right-hand side in the ``solve_ivp`` calling convention."""
        return self.matrix @ vector + self.offset

    def apply(self, state: MomentState) -> MomentState:
        """Time derivative of the moments."""
        return MomentState.from_vector(self.matrix @ state.to_vector() + self.offset)

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues of both blocks."""
        return np.concatenate([np.linalg.eigvals(self.first_order), np.linalg.eigvals(self.second_order)])

    @property
    def is_hurwitz(self) -> bool:
        """Whether every eigenvalue has a strictly negative real part."""
        return bool(np.all(self.eigenvalues().real < 0))

    def fixed_point(self) -> MomentState:
        """Moments at which the generator vanishes."""
        second = np.linalg.solve(self.second_order, -self.inhomogeneity)
        return MomentState.from_vector(np.concatenate([np.zeros(2), second]))


def _require_confined(omega_sq: float) -> float:
    if omega_sq <= 0:
        msg = f"Master equation needs a positive squared Bohr frequency, got {omega_sq:.6g}."
        raise UnconfinedPotentialError(msg)
    return float(np.sqrt(omega_sq))


def redfield_generator(coeffs: BathCoefficients, omega_sq: float) -> LinearGenerator:
    """Moment generator of the Bloch-Redfield equation at squared Bohr frequency ``omega_sq``."""
    omega = _require_confined(omega_sq)
    restoring = omega_sq - coeffs.sigma_prime
    damping = coeffs.delta / (2.0 * omega)
    return LinearGenerator(
        first_order=np.array([[0.0, 1.0], [-restoring, damping]]),
        second_order=np.array(
            [
                [0.0, 0.0, 1.0],
                [0.0, 2.0 * damping, -restoring],
                [-2.0 * restoring, 2.0, damping],
            ],
        ),
        inhomogeneity=np.array([0.0, -coeffs.sigma / 2.0, -coeffs.delta_prime / omega]),
        label="redfield",
    )


def gkls_generator(coeffs: BathCoefficients, omega_sq: float) -> LinearGenerator:
    """Moment generator of the secular (GKLS) equation at squared Bohr frequency ``omega_sq``."""
    omega = _require_confined(omega_sq)
    rotation = omega_sq - coeffs.sigma_prime / 2.0
    damping = coeffs.delta / (4.0 * omega)
    return LinearGenerator(
        first_order=np.array([[damping, rotation / omega_sq], [-rotation, damping]]),
        second_order=np.array(
            [
                [2.0 * damping, 0.0, rotation / omega_sq],
                [0.0, 2.0 * damping, -rotation],
                [-2.0 * rotation, 2.0 * rotation / omega_sq, 2.0 * damping],
            ],
        ),
        inhomogeneity=np.array([-coeffs.sigma / (4.0 * omega_sq), -coeffs.sigma / 4.0, 0.0]),
        label="gkls",
    )


def redfield_rhs(state: MomentState, coeffs: BathCoefficients, omega_sq: float) -> MomentState:
    """Time derivative of the moments under the Bloch-Redfield equation."""
    return redfield_generator(coeffs, omega_sq).apply(state)


def gkls_rhs(state: MomentState, coeffs: BathCoefficients, omega_sq: float) -> MomentState:
    """Time derivative of the moments under the secular (GKLS) equation."""
    return gkls_generator(coeffs, omega_sq).apply(state)


def generator_for(params: ModelParams, coeffs: BathCoefficients) -> LinearGenerator:
    """Generator selected by the structural flags of ``params``.

    Without the Lamb shift the Redfield equation loses Σ′ and Δ′; the GKLS equation
    loses Σ′ (it never contains Δ′).
    """
    if not params.lamb_shift:
        coeffs = coeffs.without_lamb_shift()
    if params.secular:
        return gkls_generator(coeffs, params.bohr_frequency_sq)
    return redfield_generator(coeffs, params.bohr_frequency_sq)


class CorrectionHamiltonian(BaseModel):
    """Quadratic Hamiltonian ``a x² + b p² + c {x, p} + d`` induced by the Lamb shift.

    Args:
        xx: Coefficient of ``x²``.
        pp: Coefficient of ``p²``.
        anticommutator: Coefficient of ``{x, p}``.
        constant: Energy offset.

    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    xx: float
    pp: float
    anticommutator: float
    constant: float

    @property
    def potential_shift(self) -> float:
        """Change of the squared trap frequency, ``2a``."""
        return 2.0 * self.xx


def correction_hamiltonian(coeffs: BathCoefficients, omega_sq: float, *, secular: bool) -> CorrectionHamiltonian:
    """Lamb-shift correction to the system Hamiltonian.

    Non-secular: ``-Σ′x²/2 - (Δ/8ω){x, p} + Δ′/4ω``. Secular: ``-(Σ′/4)(x² + p²/ω²)``.
    """
    omega = _require_confined(omega_sq)
    if secular:
        return CorrectionHamiltonian(
            xx=-coeffs.sigma_prime / 4.0,
            pp=-coeffs.sigma_prime / (4.0 * omega_sq),
            anticommutator=0.0,
            constant=0.0,
        )
    return CorrectionHamiltonian(
        xx=-coeffs.sigma_prime / 2.0,
        pp=0.0,
        anticommutator=-coeffs.delta / (8.0 * omega),
        constant=coeffs.delta_prime / (4.0 * omega),
    )
