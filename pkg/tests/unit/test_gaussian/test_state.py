import numpy as np
import pytest

from meanforce.exceptions import MeanForceValidationError
from meanforce.gaussian.state import GaussianState, is_physical


def test_from_covariance_round_trip() -> None:
    state = GaussianState.from_covariance([[2.0, 0.3], [0.3, 1.5]], mean=(0.5, -1.0))
    np.testing.assert_array_equal(state.covariance, [[2.0, 0.3], [0.3, 1.5]])
    np.testing.assert_array_equal(state.mean, [0.5, -1.0])
    assert state.is_displaced
    assert state.determinant == pytest.approx(2.91)


@pytest.mark.parametrize(
    ("covariance", "expected_match"),
    [
        (np.eye(3), "must be 2x2"),
        ([[1.0, 0.2], [0.1, 1.0]], "must be symmetric"),
    ],
)
def test_from_covariance_rejects_invalid_matrices(covariance: object, expected_match: str) -> None:
    with pytest.raises(MeanForceValidationError, match=expected_match):
        GaussianState.from_covariance(covariance)


def test_centred_drops_the_mean() -> None:
    state = GaussianState(xx=1.0, pp=1.0, mean_x=2.0).centred()
    assert not state.is_displaced
    assert state.xx == 1.0


@pytest.mark.parametrize(
    ("state", "expected"),
    [
        (GaussianState(xx=0.5, pp=0.5), True),
        (GaussianState(xx=2.0, pp=0.125), True),
        (GaussianState(xx=0.4, pp=0.5), False),
        (GaussianState(xx=1.0, pp=1.0, xp=0.9), False),
        (GaussianState(xx=-1.0, pp=-1.0), False),
    ],
)
def test_physicality(state: GaussianState, expected: bool) -> None:
    check = is_physical(state)
    assert bool(check) is expected
    assert check.margin == pytest.approx(state.determinant - 0.25)


def test_physicality_tolerance() -> None:
    state = GaussianState(xx=0.5, pp=0.5 - 1e-11)
    assert not is_physical(state)
    assert is_physical(state, tol=1e-10)
