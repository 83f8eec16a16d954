"""Raw first and second moments and their time series."""

from typing import Self

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from meanforce.exceptions import MeanForceValidationError
from meanforce.gaussian.state import GaussianState

MOMENT_NAMES = ("x", "p", "xx", "pp", "anticommutator")
TRAJECTORY_COLUMNS = ("t", "x", "p", "xx", "pp", "xp")


class MomentState(BaseModel):
    """Moments ``(⟨x⟩, ⟨p⟩, ⟨x²⟩, ⟨p²⟩, ⟨{x, p}⟩)`` of the oscillator.

    Second moments are raw, not centred.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    mean_x: float = Field(default=0.0, allow_inf_nan=False)
    mean_p: float = Field(default=0.0, allow_inf_nan=False)
    xx: float = Field(allow_inf_nan=False)
    pp: float = Field(allow_inf_nan=False)
    anticommutator: float = Field(default=0.0, allow_inf_nan=False)

    @classmethod
    def from_vector(cls, vector: npt.ArrayLike) -> Self:
        """Build from a length-5 vector in ``MOMENT_NAMES`` order."""
        values = np.asarray(vector, dtype=float)
        if values.shape != (len(MOMENT_NAMES),):
            msg = f"Moment vector must have shape (5,), got {values.shape}."
            raise MeanForceValidationError(msg)
        mean_x, mean_p, xx, pp, anticommutator = (float(v) for v in values)
        return cls(mean_x=mean_x, mean_p=mean_p, xx=xx, pp=pp, anticommutator=anticommutator)

    @classmethod
    def from_gaussian(cls, state: GaussianState) -> Self:
        """Raw moments of a Gaussian state."""
        return cls(
            mean_x=state.mean_x,
            mean_p=state.mean_p,
            xx=state.xx + state.mean_x**2,
            pp=state.pp + state.mean_p**2,
            anticommutator=2.0 * (state.xp + state.mean_x * state.mean_p),
        )

    def to_vector(self) -> np.ndarray:
        """Length-5 vector in ``MOMENT_NAMES`` order."""
        return np.array([self.mean_x, self.mean_p, self.xx, self.pp, self.anticommutator])

    def to_gaussian(self) -> GaussianState:
        """Gaussian state with these moments."""
        return GaussianState(
            xx=self.xx - self.mean_x**2,
            pp=self.pp - self.mean_p**2,
            xp=0.5 * self.anticommutator - self.mean_x * self.mean_p,
            mean_x=self.mean_x,
            mean_p=self.mean_p,
        )


class Trajectory(BaseModel):
    """Moments sampled on a time grid.

    Args:
        times: Strictly increasing sample times starting at 0.
        moments: Array of shape ``(len(times), 5)`` in ``MOMENT_NAMES`` order.
        label: Name of the dynamics that produced the samples.

    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    times: np.ndarray
    moments: np.ndarray
    label: str = Field(min_length=1)

    @model_validator(mode="after")
    def _validate_shapes(self) -> Self:
        if self.times.ndim != 1 or self.moments.shape != (self.times.size, len(MOMENT_NAMES)):
            msg = f"Moments of shape {self.moments.shape} do not match {self.times.size} sample times."
            raise MeanForceValidationError(msg)
        return self

    def __len__(self) -> int:
        """Number of samples."""
        return self.times.size

    def state_at(self, index: int) -> MomentState:
        """Moments at one sample."""
        return MomentState.from_vector(self.moments[index])

    @property
    def final_state(self) -> MomentState:
        """Moments at the last sample."""
        return self.state_at(-1)

    def to_dataframe(self) -> pd.DataFrame:
        """Table with columns ``t, x, p, xx, pp, xp``, where ``xp = ½⟨{x, p}⟩``."""
        return pd.DataFrame(
            {
                "t": self.times,
                "x": self.moments[:, 0],
                "p": self.moments[:, 1],
                "xx": self.moments[:, 2],
                "pp": self.moments[:, 3],
                "xp": 0.5 * self.moments[:, 4],
            },
            columns=list(TRAJECTORY_COLUMNS),
        )


def validate_time_grid(times: npt.ArrayLike) -> np.ndarray:
    """Return the grid as a float array after checking it starts at 0 and increases strictly.

    Raises:
        MeanForceValidationError: If the grid is empty, does not start at 0 or is not increasing.

    """
    grid = np.asarray(times, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        msg = "Time grid must be a non-empty one-dimensional array."
        raise MeanForceValidationError(msg)
    if grid[0] != 0:
        msg = f"Time grid must start at 0, got {grid[0]}."
        raise MeanForceValidationError(msg)
    if np.any(np.diff(grid) <= 0) or not np.all(np.isfinite(grid)):
        msg = "Time grid must be finite and strictly increasing."
        raise MeanForceValidationError(msg)
    return grid
