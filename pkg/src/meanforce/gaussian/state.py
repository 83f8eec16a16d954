"""Single-mode Gaussian states described by first and second moments."""

from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from meanforce.exceptions import MeanForceValidationError

HEISENBERG_BOUND = 0.25
PHYSICALITY_TOLERANCE = 1e-12
SYMMETRY_TOLERANCE = 1e-12


class GaussianState(BaseModel):
    """Gaussian state of one oscillator mode.

    The covariance is symmetrised, ``xp = ½⟨{x, p}⟩ - ⟨x⟩⟨p⟩``. Construction does not
    require the state to satisfy the uncertainty relation; use ``is_physical`` for that.

    Args:
        xx: Variance of the position.
        pp: Variance of the momentum.
        xp: Symmetrised position-momentum covariance.
        mean_x: Mean position.
        mean_p: Mean momentum.

    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    xx: float = Field(allow_inf_nan=False, description="Position variance.")
    pp: float = Field(allow_inf_nan=False, description="Momentum variance.")
    xp: float = Field(default=0.0, allow_inf_nan=False, description="Symmetrised covariance.")
    mean_x: float = Field(default=0.0, allow_inf_nan=False, description="Mean position.")
    mean_p: float = Field(default=0.0, allow_inf_nan=False, description="Mean momentum.")

    @classmethod
    def from_covariance(cls, covariance: npt.ArrayLike, mean: npt.ArrayLike = (0.0, 0.0)) -> Self:
        """Build a state from a 2x2 covariance matrix and a mean vector.

        Raises:
            MeanForceValidationError: If the matrix is not 2x2 and symmetric.

        """
        matrix = np.asarray(covariance, dtype=float)
        if matrix.shape != (2, 2):
            msg = f"Covariance must be 2x2, got shape {matrix.shape}."
            raise MeanForceValidationError(msg)
        scale = max(1.0, float(np.max(np.abs(matrix))))
        if abs(matrix[0, 1] - matrix[1, 0]) > SYMMETRY_TOLERANCE * scale:
            msg = f"Covariance must be symmetric, got off-diagonal entries {matrix[0, 1]} and {matrix[1, 0]}."
            raise MeanForceValidationError(msg)
        mean_x, mean_p = np.asarray(mean, dtype=float)
        return cls(
            xx=float(matrix[0, 0]),
            pp=float(matrix[1, 1]),
            xp=float(0.5 * (matrix[0, 1] + matrix[1, 0])),
            mean_x=float(mean_x),
            mean_p=float(mean_p),
        )

    @property
    def covariance(self) -> np.ndarray:
        """Covariance matrix of ``(x, p)``."""
        return np.array([[self.xx, self.xp], [self.xp, self.pp]])

    @property
    def mean(self) -> np.ndarray:
        """Mean vector ``(⟨x⟩, ⟨p⟩)``."""
        return np.array([self.mean_x, self.mean_p])

    @property
    def determinant(self) -> float:
        """Determinant of the covariance matrix."""
        return self.xx * self.pp - self.xp**2

    @property
    def is_displaced(self) -> bool:
        """Whether the mean vector is non-zero."""
        return self.mean_x != 0 or self.mean_p != 0

    def centred(self) -> Self:
        """Return the state with its mean set to zero."""
        return self.model_copy(update={"mean_x": 0.0, "mean_p": 0.0})


class PhysicalityCheck(BaseModel):
    """Outcome of the uncertainty-relation test.

    Args:
        is_physical: Whether the covariance is positive definite with ``det ≥ 1/4``.
        margin: ``det - 1/4``; negative values measure the violation.

    """

    model_config = ConfigDict(frozen=True)

    is_physical: bool
    margin: float

    def __bool__(self) -> bool:
        """Truth value of the check."""
        return self.is_physical


def is_physical(state: GaussianState, *, tol: float = PHYSICALITY_TOLERANCE) -> PhysicalityCheck:
    """Check positive definiteness and the uncertainty relation ``det Σ ≥ 1/4``."""
    margin = state.determinant - HEISENBERG_BOUND
    positive = state.xx > 0 and state.determinant > 0
    return PhysicalityCheck(is_physical=positive and margin >= -tol, margin=margin)
