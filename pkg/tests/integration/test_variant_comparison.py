import numpy as np
import pytest

from meanforce.bath.model_params import ModelParams
from meanforce.cli.commands import cmd_dynamics
from meanforce.cli.config import config_from_mapping
from meanforce.gaussian.reference_states import thermal_state
from meanforce.numerics.integrator_config import IntegrationMethod, IntegratorConfig
from meanforce.oscillator import DampedOscillator
from meanforce.variants import Method, VariantSpec

SHIFTED_WITHOUT_LAMB_SHIFT = VariantSpec(method=Method.Redfield, lamb_shift=False, shifted=True)
SECULAR_WITH_LAMB_SHIFT = VariantSpec(method=Method.GKLS, lamb_shift=True)


@pytest.fixture
def canonical_oscillator(canonical_params: ModelParams) -> DampedOscillator:
    return DampedOscillator(canonical_params)


@pytest.mark.parametrize("temperature", [1.0, 10.0])
def test_shifted_variant_reproduces_exact_steady_state(canonical_params: ModelParams, temperature: float) -> None:
    oscillator = DampedOscillator(canonical_params.with_flags(temperature=temperature))
    assert oscillator.fidelity_to_exact(SHIFTED_WITHOUT_LAMB_SHIFT) >= 0.99


def test_secular_variant_on_physical_hamiltonian_fails_at_high_temperature(canonical_params: ModelParams) -> None:
    oscillator = DampedOscillator(canonical_params.with_flags(temperature=10.0))
    assert oscillator.fidelity_to_exact(SECULAR_WITH_LAMB_SHIFT) < 0.9


def test_every_default_variant_is_stable_with_counter_term(canonical_oscillator: DampedOscillator) -> None:
    for label in ("exact", "redfield_ls", "gkls_ls", "redfield_shifted", "gkls_shifted"):
        assert canonical_oscillator.is_stable(VariantSpec.from_label(label))


def test_shifted_dynamics_track_exact_dynamics() -> None:
    """After a few relaxation times the shifted equation without Lamb shift follows the exact ⟨x²⟩ within 5 %."""
    config = config_from_mapping(
        {
            "model": {"temperature": 10.0},
            "variants": ["exact", "redfield_shifted"],
            "time": {"t_max": 200.0, "n_points": 21},
        },
    )
    frame = cmd_dynamics(config)
    late = frame[frame["t"] >= 50.0]
    relative = np.abs(late["redfield_shifted_xx"] - late["exact_xx"]) / late["exact_xx"]
    assert relative.max() < 0.05


def test_shifted_variant_degrades_at_low_temperature(canonical_params: ModelParams) -> None:
    """At T ≪ ω the shifted equation misses the exact steady state by more than at high T."""
    cold = DampedOscillator(canonical_params.with_flags(temperature=0.05))
    hot = DampedOscillator(canonical_params.with_flags(temperature=10.0))
    assert cold.fidelity_to_exact(SHIFTED_WITHOUT_LAMB_SHIFT) < hot.fidelity_to_exact(SHIFTED_WITHOUT_LAMB_SHIFT)


def test_first_moments_relax_for_every_stable_variant(canonical_params: ModelParams) -> None:
    integrator = IntegratorConfig(method=IntegrationMethod.MatrixExponential)
    oscillator = DampedOscillator(canonical_params, integrator=integrator)
    rng = np.random.default_rng(3)
    times = np.array([0.0, 300.0, 600.0])
    for label in ("exact", "redfield_ls", "gkls_ls", "redfield_shifted", "gkls_shifted"):
        mean_x, mean_p = rng.uniform(-2.0, 2.0, size=2)
        initial = thermal_state(11.0, 1.0).model_copy(update={"mean_x": mean_x, "mean_p": mean_p})
        final = oscillator.dynamics(VariantSpec.from_label(label), initial, times).final_state
        assert abs(final.mean_x) < 1e-6
        assert abs(final.mean_p) < 1e-6
