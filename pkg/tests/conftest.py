import pytest

from meanforce.bath.model_params import ModelParams


@pytest.fixture
def canonical_params() -> ModelParams:
    """ω₀ = 1, λ = 0.1, Λ = 100, T = 1 with the counter-term."""
    return ModelParams(omega0=1.0, coupling=0.1, cutoff=100.0, temperature=1.0, counter_term=True)


@pytest.fixture
def uncompensated_params() -> ModelParams:
    """Canonical bath without the counter-term; the exact dynamics are unstable."""
    return ModelParams(omega0=1.0, coupling=0.1, cutoff=100.0, temperature=1.0, counter_term=False)


@pytest.fixture
def weak_params() -> ModelParams:
    return ModelParams(omega0=1.0, coupling=1e-3, cutoff=10.0, temperature=1.0)


@pytest.fixture
def uncoupled_params() -> ModelParams:
    return ModelParams(omega0=1.0, coupling=0.0, cutoff=100.0, temperature=1.0, counter_term=True)
