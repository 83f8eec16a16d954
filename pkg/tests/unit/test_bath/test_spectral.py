import numpy as np
import pytest

from meanforce.bath.model_params import ModelParams
from meanforce.bath.spectral import bose_occupation, decay_rate, spectral_coth, spectral_density, thermal_factor
from meanforce.exceptions import MeanForceDomainError


@pytest.fixture
def frequencies() -> np.ndarray:
    return np.geomspace(1e-3, 300.0, 50)


def test_spectral_density_is_odd(canonical_params: ModelParams, frequencies: np.ndarray) -> None:
    np.testing.assert_array_equal(spectral_density(-frequencies, canonical_params), -spectral_density(frequencies, canonical_params))


def test_spectral_density_values(canonical_params: ModelParams) -> None:
    assert spectral_density(0.0, canonical_params) == 0.0
    assert spectral_density(100.0, canonical_params) == pytest.approx(5.0)
    assert spectral_density(1.0, canonical_params) == pytest.approx(0.1 / 1.0001)


def test_scalar_input_gives_float(canonical_params: ModelParams) -> None:
    assert isinstance(spectral_density(2.0, canonical_params), float)
    assert isinstance(thermal_factor(2.0, 1.0), float)


def test_bose_occupation_reflection() -> None:
    """n(-ω) = -1 - n(ω)."""
    omega = np.geomspace(1e-3, 30.0, 40)
    np.testing.assert_allclose(bose_occupation(-omega, 1.0), -1.0 - bose_occupation(omega, 1.0), rtol=1e-12)


def test_bose_occupation_at_zero_temperature() -> None:
    np.testing.assert_array_equal(bose_occupation([-2.0, 3.0], 0.0), [-1.0, 0.0])


def test_bose_occupation_pole_raises() -> None:
    with pytest.raises(MeanForceDomainError, match="pole"):
        bose_occupation([0.0, 1.0], 1.0)


@pytest.mark.parametrize("temperature", [0.1, 1.0, 10.0])
def test_detailed_balance(temperature: float, frequencies: np.ndarray) -> None:
    """γ(-ω) = exp(-ω/T) γ(ω) wherever the absorption rate is representable."""
    params = ModelParams(coupling=0.1, cutoff=100.0, temperature=temperature)
    omega = frequencies[frequencies / temperature < 600.0]
    np.testing.assert_allclose(
        decay_rate(-omega, params),
        np.exp(-omega / temperature) * decay_rate(omega, params),
        rtol=1e-12,
    )


def test_decay_rate_at_zero_temperature(frequencies: np.ndarray) -> None:
    params = ModelParams(coupling=0.1, cutoff=100.0, temperature=0.0)
    np.testing.assert_array_equal(decay_rate(-frequencies, params), 0.0)
    np.testing.assert_allclose(decay_rate(frequencies, params), 2.0 * spectral_density(frequencies, params))


def test_decay_rate_matches_definition(canonical_params: ModelParams) -> None:
    omega = 2.5
    expected = 2.0 * spectral_density(omega, canonical_params) * (1.0 + 1.0 / np.expm1(omega))
    assert decay_rate(omega, canonical_params) == pytest.approx(expected, rel=1e-13)


def test_decay_rate_at_zero_frequency_raises(canonical_params: ModelParams) -> None:
    with pytest.raises(MeanForceDomainError):
        decay_rate(0.0, canonical_params)


def test_spectral_coth_is_even_and_finite_at_zero(canonical_params: ModelParams, frequencies: np.ndarray) -> None:
    np.testing.assert_array_equal(spectral_coth(-frequencies, canonical_params), spectral_coth(frequencies, canonical_params))
    assert spectral_coth(0.0, canonical_params) == pytest.approx(0.2)
    assert spectral_coth(1e-6, canonical_params) == pytest.approx(0.2, rel=1e-9)


def test_spectral_coth_is_sum_of_rates(canonical_params: ModelParams, frequencies: np.ndarray) -> None:
    """J coth = (γ(ω) + γ(-ω)) / 2."""
    rates = 0.5 * (decay_rate(frequencies, canonical_params) + decay_rate(-frequencies, canonical_params))
    np.testing.assert_allclose(spectral_coth(frequencies, canonical_params), rates, rtol=1e-12)


def test_thermal_factor_limits() -> None:
    assert thermal_factor(1.0, 0.0) == 1.0
    assert thermal_factor(1e3, 1.0) == 1.0
    assert thermal_factor(1.0, 1.0) == pytest.approx(1.0 / np.tanh(0.5))
