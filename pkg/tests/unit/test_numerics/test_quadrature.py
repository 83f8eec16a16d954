import numpy as np
import pytest

from meanforce.exceptions import QuadratureError
from meanforce.numerics.quadrature import QuadratureResult, integrate, integrate_vector, log_spaced_points


def test_integrate_semi_infinite() -> None:
    result = integrate(lambda x: np.exp(-x), 0.0, np.inf)
    assert result.value == pytest.approx(1.0, abs=1e-10)
    assert result.error <= 1e-8


def test_integrate_empty_interval_is_zero() -> None:
    result = integrate(np.cos, 2.0, 2.0)
    assert result == QuadratureResult(value=0.0, error=0.0)


def test_integrate_cosine_weight() -> None:
    """∫₀^∞ exp(-x) cos(x) dx = 1/2."""
    result = integrate(lambda x: np.exp(-x), 0.0, np.inf, weight="cos", wvar=1.0)
    assert result.value == pytest.approx(0.5, abs=1e-9)


def test_integrate_uses_breakpoints_inside_interval() -> None:
    """A kink at x = 1 is resolved; points outside the interval are ignored."""
    result = integrate(lambda x: abs(x - 1.0), 0.0, 3.0, points=[-5.0, 1.0, 7.0])
    assert result.value == pytest.approx(2.5, abs=1e-12)


def test_integrate_reports_missed_tolerance() -> None:
    with pytest.raises(QuadratureError, match="did not converge") as excinfo:
        integrate(lambda x: np.cos(50.0 * x), 0.0, 10.0, limit=1, label="oscillation")
    assert excinfo.value.estimate > 1e-8
    assert "oscillation" in str(excinfo.value)


def test_quadrature_results_add_and_scale() -> None:
    total = QuadratureResult(value=1.0, error=1e-9) + QuadratureResult(value=2.0, error=2e-9)
    scaled = total.scaled(-2.0)
    assert scaled.value == pytest.approx(-6.0)
    assert scaled.error == pytest.approx(6e-9)


def test_integrate_vector_shares_mesh() -> None:
    result = integrate_vector(lambda x: np.array([1.0, x, x**2]), 0.0, 1.0)
    np.testing.assert_allclose(result.values, [1.0, 0.5, 1.0 / 3.0], rtol=1e-12)



def test_log_spaced_points() -> None:
    np.testing.assert_allclose(log_spaced_points(100.0, 5000.0), [100.0, 10.0**2.5, 1000.0, 10.0**3.5])
    assert log_spaced_points(100.0, 100.0) == []
    assert log_spaced_points(0.0, 10.0) == []
