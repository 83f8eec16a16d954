import numpy as np
import pytest

from meanforce.bath.model_params import ModelParams
from meanforce.exact.covariances import (
    memory_integral,
    memory_integral_time_domain,
    propagator_for,
    steady_covariance,
    transient_covariance,
)
from meanforce.gaussian.reference_states import thermal_state

CANONICAL_CUTOFF = 100.0
RELAXATION_TIMES = 15.0


@pytest.mark.parametrize("temperature", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("coupling", [0.05, 0.1, 0.15])
def test_transient_relaxes_to_steady_state(temperature: float, coupling: float) -> None:
    params = ModelParams(
        omega0=1.0,
        coupling=coupling,
        cutoff=CANONICAL_CUTOFF,
        temperature=temperature,
        counter_term=True,
    )
    final_time = RELAXATION_TIMES / propagator_for(params).slowest_rate
    initial = thermal_state(params.physical_frequency_sq, temperature)
    final = transient_covariance(params, initial, [0.0, final_time]).final_state.to_gaussian()
    steady = steady_covariance(params)
    assert final.xx == pytest.approx(steady.xx, rel=1e-4)
    assert final.pp == pytest.approx(steady.pp, rel=1e-4)
    assert final.xp == pytest.approx(0.0, abs=1e-4)


def test_frequency_and_time_domain_memory_agree() -> None:
    """The frequency-resolved memory integral matches the lag integral over the noise kernel."""
    params = ModelParams(omega0=1.0, coupling=0.1, cutoff=10.0, temperature=1.0, counter_term=True)
    times = np.array([0.5, 1.0, 2.0])
    frequency_domain = memory_integral(params, times)
    for index, time in enumerate(times):
        time_domain = memory_integral_time_domain(params, time)
        np.testing.assert_allclose(frequency_domain[index], time_domain, rtol=1e-3, atol=1e-5)
