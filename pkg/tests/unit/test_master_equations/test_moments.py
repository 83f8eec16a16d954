import numpy as np
import pytest

from meanforce.exceptions import MeanForceValidationError
from meanforce.gaussian.state import GaussianState
from meanforce.master_equations.moments import TRAJECTORY_COLUMNS, MomentState, Trajectory, validate_time_grid


def test_raw_moments_of_displaced_state() -> None:
    state = GaussianState(xx=1.0, pp=2.0, xp=0.25, mean_x=0.5, mean_p=-2.0)
    moments = MomentState.from_gaussian(state)
    assert moments.xx == pytest.approx(1.25)
    assert moments.pp == pytest.approx(6.0)
    assert moments.anticommutator == pytest.approx(2.0 * (0.25 - 1.0))
    assert moments.to_gaussian() == state


def test_vector_shape_is_checked() -> None:
    with pytest.raises(MeanForceValidationError, match="shape"):
        MomentState.from_vector([1.0, 2.0, 3.0])


def test_trajectory_table() -> None:
    times = np.array([0.0, 1.0])
    moments = np.array([[0.0, 0.0, 1.0, 2.0, 0.5], [0.1, 0.2, 1.5, 2.5, -0.5]])
    trajectory = Trajectory(times=times, moments=moments, label="redfield_ls")
    frame = trajectory.to_dataframe()
    assert tuple(frame.columns) == TRAJECTORY_COLUMNS
    np.testing.assert_array_equal(frame["xp"], [0.25, -0.25])
    assert len(trajectory) == 2
    assert trajectory.final_state == MomentState(mean_x=0.1, mean_p=0.2, xx=1.5, pp=2.5, anticommutator=-0.5)


def test_trajectory_shape_mismatch_raises() -> None:
    with pytest.raises(MeanForceValidationError, match="do not match"):
        Trajectory(times=np.array([0.0, 1.0]), moments=np.zeros((3, 5)), label="gkls")


@pytest.mark.parametrize(
    ("times", "expected_match"),
    [
        ([], "non-empty"),
        ([0.5, 1.0], "must start at 0"),
        ([0.0, 2.0, 1.0], "strictly increasing"),
        ([0.0, 1.0, 1.0], "strictly increasing"),
        ([0.0, np.inf], "finite"),
    ],
)
def test_invalid_time_grid_raises(times: list[float], expected_match: str) -> None:
    with pytest.raises(MeanForceValidationError, match=expected_match):
        validate_time_grid(times)
