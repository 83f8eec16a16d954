import numpy as np
import pytest

from meanforce.bath.coefficients import BathCoefficients, coefficients
from meanforce.bath.model_params import ModelParams
from meanforce.exceptions import UnconfinedPotentialError
from meanforce.gaussian.reference_states import thermal_state
from meanforce.master_equations.generators import (
    correction_hamiltonian,
    generator_for,
    gkls_generator,
    gkls_rhs,
    redfield_generator,
    redfield_rhs,
)
from meanforce.master_equations.moments import MomentState
from meanforce.master_equations.steady_state import steady_state


def _random_params(rng: np.random.Generator) -> ModelParams:
    return ModelParams(
        omega0=rng.uniform(0.5, 2.0),
        coupling=rng.uniform(1e-3, 0.05),
        cutoff=rng.uniform(5.0, 50.0),
        temperature=rng.uniform(0.1, 5.0),
        counter_term=True,
    )


@pytest.fixture
def canonical_coefficients(canonical_params: ModelParams) -> BathCoefficients:
    return coefficients(canonical_params)


def test_uncoupled_rhs_is_free_oscillation(uncoupled_params: ModelParams) -> None:
    coeffs = coefficients(uncoupled_params)
    state = MomentState(mean_x=0.3, mean_p=-0.2, xx=1.0, pp=2.0, anticommutator=0.4)
    expected = MomentState(mean_x=-0.2, mean_p=-0.3, xx=0.4, pp=-0.4, anticommutator=2.0)
    assert redfield_rhs(state, coeffs, 1.0) == expected
    assert gkls_rhs(state, coeffs, 1.0) == expected


def test_fixed_points_of_random_models() -> None:
    """Every stable analytic steady state is annihilated by its generator."""
    rng = np.random.default_rng(2024)
    flag_sets = [
        {"secular": secular, "lamb_shift": lamb_shift, "shifted": shifted}
        for secular in (False, True)
        for lamb_shift in (True, False)
        for shifted in (False, True)
    ]
    checked = 0
    for _ in range(50):
        params = _random_params(rng)
        for flags in flag_sets:
            variant = params.with_flags(**flags)
            coeffs = coefficients(variant)
            generator = generator_for(variant, coeffs)
            if not generator.is_hurwitz:
                continue
            state = MomentState.from_gaussian(steady_state(variant, coeffs=coeffs))
            np.testing.assert_allclose(generator.apply(state).to_vector(), 0.0, atol=1e-10)
            checked += 1
    assert checked >= 50 * 6


def test_redfield_fixed_point_with_lamb_shift(canonical_coefficients: BathCoefficients) -> None:
    omega_sq = 11.0
    omega = np.sqrt(omega_sq)
    fixed = redfield_generator(canonical_coefficients, omega_sq).fixed_point()
    coth = 1.0 / np.tanh(omega / 2.0)
    expected_xx = omega / (2.0 * (omega_sq - canonical_coefficients.sigma_prime)) * (
        coth - canonical_coefficients.delta_prime / omega_sq
    )
    assert fixed.xx == pytest.approx(expected_xx, rel=1e-10)
    assert fixed.pp == pytest.approx(omega * coth / 2.0, rel=1e-10)
    assert fixed.anticommutator == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("keep_sigma_prime", [False, True])
def test_gkls_fixed_point_is_thermal(canonical_coefficients: BathCoefficients, keep_sigma_prime: bool) -> None:
    coeffs = canonical_coefficients.without_lamb_shift(keep_sigma_prime=keep_sigma_prime)
    fixed = gkls_generator(coeffs, 11.0).fixed_point().to_gaussian()
    thermal = thermal_state(11.0, 1.0)
    assert fixed.xx == pytest.approx(thermal.xx, rel=1e-10)
    assert fixed.pp == pytest.approx(thermal.pp, rel=1e-10)


def test_redfield_without_lamb_shift_is_thermal(canonical_coefficients: BathCoefficients) -> None:
    fixed = redfield_generator(canonical_coefficients.without_lamb_shift(), 11.0).fixed_point().to_gaussian()
    thermal = thermal_state(11.0, 1.0)
    assert fixed.xx == pytest.approx(thermal.xx, rel=1e-10)
    assert fixed.pp == pytest.approx(thermal.pp, rel=1e-10)


def test_gkls_relaxation_rates(canonical_coefficients: BathCoefficients) -> None:
    """Every second-moment mode of the secular generator decays at -Δ/2ω."""
    generator = gkls_generator(canonical_coefficients, 11.0)
    rate = canonical_coefficients.delta / (2.0 * np.sqrt(11.0))
    np.testing.assert_allclose(np.linalg.eigvals(generator.second_order).real, rate, rtol=1e-10)
    np.testing.assert_allclose(np.linalg.eigvals(generator.first_order).real, rate / 2.0, rtol=1e-10)
    assert generator.is_hurwitz


def test_redfield_loses_stability_without_counter_term(uncompensated_params: ModelParams) -> None:
    coeffs = coefficients(uncompensated_params)
    assert not redfield_generator(coeffs, 1.0).is_hurwitz
    assert gkls_generator(coeffs, 1.0).is_hurwitz


def test_augmented_matrix_carries_the_drive(canonical_coefficients: BathCoefficients) -> None:
    generator = redfield_generator(canonical_coefficients, 11.0)
    assert generator.augmented.shape == (6, 6)
    np.testing.assert_array_equal(generator.augmented[:5, 5], generator.offset)
    np.testing.assert_array_equal(generator.augmented[5], 0.0)


@pytest.mark.parametrize("omega_sq", [0.0, -2.0])
def test_unconfined_generator_raises(canonical_coefficients: BathCoefficients, omega_sq: float) -> None:
    with pytest.raises(UnconfinedPotentialError):
        redfield_generator(canonical_coefficients, omega_sq)
    with pytest.raises(UnconfinedPotentialError):
        gkls_generator(canonical_coefficients, omega_sq)


def test_correction_hamiltonian(canonical_coefficients: BathCoefficients) -> None:
    sigma_prime = canonical_coefficients.sigma_prime
    redfield = correction_hamiltonian(canonical_coefficients, 11.0, secular=False)
    gkls = correction_hamiltonian(canonical_coefficients, 11.0, secular=True)
    assert redfield.potential_shift == pytest.approx(-sigma_prime)
    assert gkls.potential_shift == pytest.approx(-sigma_prime / 2.0)
    assert gkls.pp == pytest.approx(-sigma_prime / 44.0)
    assert redfield.anticommutator == pytest.approx(-canonical_coefficients.delta / (8.0 * np.sqrt(11.0)))
