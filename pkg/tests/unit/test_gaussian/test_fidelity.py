import numpy as np
import pytest
from scipy.linalg import eigh

from meanforce.exceptions import MeanForceDomainError
from meanforce.gaussian.fidelity import fidelity
from meanforce.gaussian.reference_states import thermal_state
from meanforce.gaussian.state import GaussianState

FOCK_DIMENSION = 60


def _fock_density_matrix(state: GaussianState) -> np.ndarray:
    """Gibbs state with the given diagonal covariance, built in a truncated Fock basis."""
    omega = np.sqrt(state.pp / state.xx)
    symplectic = 2.0 * np.sqrt(state.xx * state.pp)
    beta = np.log((symplectic + 1.0) / (symplectic - 1.0)) / omega

    lowering = np.diag(np.sqrt(np.arange(1, FOCK_DIMENSION)), k=1)
    x = (lowering + lowering.T) / np.sqrt(2.0)
    p = 1j * (lowering.T - lowering) / np.sqrt(2.0)
    hamiltonian = 0.5 * (p @ p + omega**2 * x @ x)

    energies, vectors = eigh(hamiltonian)
    weights = np.exp(-beta * (energies - energies[0]))
    weights /= weights.sum()
    return (vectors * weights) @ vectors.conj().T


def _matrix_sqrt(matrix: np.ndarray) -> np.ndarray:
    values, vectors = eigh(matrix)
    return (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.conj().T


def _uhlmann_fidelity(first: np.ndarray, second: np.ndarray) -> float:
    root = _matrix_sqrt(first)
    values = np.linalg.eigvalsh(root @ second @ root)
    return float(np.sum(np.sqrt(np.clip(values, 0.0, None))) ** 2)


def _random_diagonal_state(rng: np.random.Generator) -> GaussianState:
    product = rng.uniform(0.3, 4.0)
    ratio = rng.uniform(0.5, 2.0)
    return GaussianState(xx=np.sqrt(product / ratio), pp=np.sqrt(product * ratio))


def test_identical_states_have_unit_fidelity() -> None:
    state = GaussianState(xx=1.3, pp=0.9, xp=0.2)
    assert fidelity(state, state) == pytest.approx(1.0, abs=1e-12)


def test_vacuum_against_thermal() -> None:
    """Overlap of the vacuum with a thermal state of unit occupation is 1/2."""
    vacuum = GaussianState(xx=0.5, pp=0.5)
    thermal = GaussianState(xx=1.5, pp=1.5)
    assert fidelity(vacuum, thermal) == pytest.approx(0.5)


def test_fidelity_is_symmetric_and_bounded() -> None:
    first = thermal_state(1.0, 1.0)
    second = thermal_state(11.0, 10.0)
    value = fidelity(first, second)
    assert value == pytest.approx(fidelity(second, first), rel=1e-14)
    assert 0.0 < value < 1.0


def test_fidelity_matches_fock_space_computation() -> None:
    rng = np.random.default_rng(7)
    for _ in range(25):
        first, second = _random_diagonal_state(rng), _random_diagonal_state(rng)
        expected = _uhlmann_fidelity(_fock_density_matrix(first), _fock_density_matrix(second))
        assert fidelity(first, second) == pytest.approx(expected, abs=1e-6)


def test_strongly_mixed_states() -> None:
    first = GaussianState(xx=1e4, pp=1e4)
    second = GaussianState(xx=1.01e4, pp=1.01e4)
    assert fidelity(first, second) == pytest.approx(1.0, abs=1e-3)
    assert fidelity(first, second) <= 1.0


def test_displaced_state_raises() -> None:
    with pytest.raises(MeanForceDomainError, match="centred states"):
        fidelity(GaussianState(xx=1.0, pp=1.0, mean_x=0.1), GaussianState(xx=1.0, pp=1.0))


def test_unphysical_state_raises() -> None:
    with pytest.raises(MeanForceDomainError, match="uncertainty relation"):
        fidelity(GaussianState(xx=1.0, pp=1.0), GaussianState(xx=0.2, pp=0.5))


def _random_physical_state(rng: np.random.Generator) -> GaussianState:
    xx = rng.uniform(0.3, 5.0)
    xp = rng.uniform(-1.0, 1.0)
    symplectic = rng.uniform(0.5, 4.0)
    return GaussianState(xx=xx, pp=(symplectic**2 + xp**2) / xx, xp=xp)


def test_bounded_on_random_pairs() -> None:
    rng = np.random.default_rng(5)
    for _ in range(1000):
        value = fidelity(_random_physical_state(rng), _random_physical_state(rng))
        assert 0.0 < value <= 1.0


def test_thermal_fidelity_falls_with_temperature_gap() -> None:
    temperatures = np.linspace(0.1, 10.0, 12)
    states = [thermal_state(1.0, temperature) for temperature in temperatures]
    table = np.array([[fidelity(left, right) for right in states] for left in states])
    for index in range(len(temperatures)):
        assert np.all(np.diff(table[index, index:]) < 0)
        assert np.all(np.diff(table[index, : index + 1]) > 0)
