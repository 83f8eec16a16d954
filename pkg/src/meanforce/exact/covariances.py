"""Exact steady and transient covariances of the damped oscillator.

The position obeys ``x(t) = g′(t)x(0) + g(t)p(0) + ∫₀ᵗ g(t - u) F(u) du`` with a
Gaussian bath force F of symmetrised spectrum ν. For a factorised initial state the
covariance is ``Σ(t) = G(t) Σ(0) G(t)ᵀ + Σᵐ(t)``, and the memory part is written as a
single frequency integral

    Σᵐ_xx = ½ ∫ ν |h|²,    Σᵐ_pp = ½ ∫ ν |h_p|²,    Σᵐ_xp = ½ ∫ ν Re(h h_p*),

where h and h_p are the finite-time Fourier integrals of g and g′ (closed form in the
residues). The frequency integral runs adaptively over ``[0, W]``; beyond W the
leading ``1/ω`` behaviour of h, h_p and ν gives an analytic tail.
"""

import numpy as np
import numpy.typing as npt
from scipy import special

from meanforce.bath.model_params import ModelParams
from meanforce.exceptions import UnstableModelError
from meanforce.exact.noise import NoiseSpectrum, noise_kernel
from meanforce.exact.propagator import Propagator, characteristic_roots
from meanforce.gaussian.reference_states import thermal_state
from meanforce.gaussian.state import GaussianState
from meanforce.master_equations.moments import Trajectory, validate_time_grid
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE, integrate, integrate_vector, log_spaced_points
from meanforce.utils.logging import get_logger

logger = get_logger(__name__)

FREQUENCY_WINDOW_FACTOR = 10.0
TRANSIENT_TOLERANCE = 1e-7
TIME_CHUNK_SIZE = 16
RESONANCE_OFFSETS = (-25.0, -5.0, -1.0, 0.0, 1.0, 5.0, 25.0)
ORACLE_TOLERANCE = 1e-6


def _require_stable(params: ModelParams) -> None:
    if not params.is_stable:
        msg = (
            f"Exact dynamics are unstable: ω_eff² = {params.physical_frequency_sq:.6g} "
            f"does not exceed λΛ = {params.reorganisation:.6g}."
        )
        raise UnstableModelError(msg)


def propagator_for(params: ModelParams) -> Propagator:
    """Propagator at the physical frequency of ``params``."""
    return characteristic_roots(params.physical_frequency_sq, params.coupling, params.cutoff)


def frequency_window(params: ModelParams) -> float:
    """Upper end ``W = 10 max(ω_eff, Λ, T)`` of the adaptive frequency integration."""
    return FREQUENCY_WINDOW_FACTOR * max(np.sqrt(params.physical_frequency_sq), params.cutoff, params.temperature)


def spectral_breakpoints(propagator: Propagator, upper: float) -> list[float]:
    """Frequencies around each resonance ``|Im s_k|`` at multiples of its width ``|Re s_k|``."""
    points: set[float] = set()
    for root in propagator.roots:
        centre = abs(root.imag)
        if centre == 0:
            continue
        width = max(abs(root.real), 1e-12 * centre)
        points.update(centre + offset * width for offset in RESONANCE_OFFSETS)
    return sorted(p for p in points if 0 < p < upper)


def frequency_breakpoints(params: ModelParams, propagator: Propagator, upper: float) -> list[float]:
    """Resonance points, ``T`` and log-spaced points from ``max(ω_eff, Λ)`` up to the window end ``upper``."""
    points = set(spectral_breakpoints(propagator, upper))
    points.update(log_spaced_points(max(np.sqrt(params.physical_frequency_sq), params.cutoff), upper))
    if 0 < params.temperature < upper:
        points.add(params.temperature)
    return sorted(points)


def _response_sq(omega: float, params: ModelParams) -> float:
    """``|ĝ(iω)|²`` from the real and imaginary parts of its denominator."""
    lorentz = params.cutoff**2 + omega**2
    real = params.physical_frequency_sq - omega**2 - params.coupling * params.cutoff**3 / lorentz
    imag = params.coupling * params.cutoff**2 * omega / lorentz
    return 1.0 / (real**2 + imag**2)


def steady_covariance(params: ModelParams, *, tol: float = DEFAULT_TOLERANCE) -> GaussianState:
    """Long-time covariance of the exact dynamics, the mean-force Gibbs state.

    ``⟨x²⟩ = ½ ∫₀^∞ |ĝ(iω)|² ν(ω) dω`` and ``⟨p²⟩ = ½ ∫₀^∞ ω² |ĝ(iω)|² ν(ω) dω``. At
    ``λ = 0`` the λ → 0⁺ limit, the Gibbs state of the physical Hamiltonian, is returned.

    Raises:
        UnstableModelError: If ``ω_eff² ≤ λΛ``.
        QuadratureError: If an integral misses its tolerance.

    """
    if params.coupling == 0:
        return thermal_state(params.physical_frequency_sq, params.temperature)
    _require_stable(params)

    noise = NoiseSpectrum(params=params)
    upper = frequency_window(params)
    points = frequency_breakpoints(params, propagator_for(params), upper)

    def position(omega: float) -> float:
        return 0.5 * _response_sq(omega, params) * noise(omega)

    def momentum(omega: float) -> float:
        return 0.5 * omega**2 * _response_sq(omega, params) * noise(omega)

    xx = integrate(position, 0.0, upper, tol=tol, points=points, label="steady ⟨x²⟩")
    xx += integrate(position, upper, np.inf, tol=tol, label="steady ⟨x²⟩ tail")
    pp = integrate(momentum, 0.0, upper, tol=tol, points=points, label="steady ⟨p²⟩")
    pp += integrate(momentum, upper, np.inf, tol=tol, label="steady ⟨p²⟩ tail")
    logger.debug("Exact steady state: ⟨x²⟩=%.10g (±%.1e), ⟨p²⟩=%.10g (±%.1e)", xx.value, xx.error, pp.value, pp.error)
    return GaussianState(xx=xx.value, pp=pp.value)


def _cosine_cube_tail(upper: float, times: np.ndarray) -> np.ndarray:
    """``∫_W^∞ cos(ωt) / ω³ dω`` for ``t ≥ 0``."""
    x = upper * times
    safe = np.where(x == 0, 1.0, x)
    _, cosine_integral = special.sici(safe)
    closed = times**2 * (np.cos(safe) / (2.0 * safe**2) - np.sin(safe) / (2.0 * safe) + cosine_integral / 2.0)
    return np.where(x == 0, 1.0 / (2.0 * upper**2), closed)


def _memory_tail(propagator: Propagator, noise: NoiseSpectrum, times: np.ndarray, upper: float) -> np.ndarray:
    g = propagator.kernel(times, 0)
    dg = propagator.kernel(times, 1)
    amplitude = noise.high_frequency_amplitude
    flat = amplitude / (2.0 * upper**2)
    oscillating = amplitude * _cosine_cube_tail(upper, times)
    return 0.5 * np.stack(
        [
            g**2 * flat,
            (1.0 + dg**2) * flat - 2.0 * dg * oscillating,
            g * dg * flat - g * oscillating,
        ],
    )


def memory_integral(
    params: ModelParams,
    times: npt.ArrayLike,
    *,
    tol: float = TRANSIENT_TOLERANCE,
    propagator: Propagator | None = None,
) -> np.ndarray:
    """Memory part ``Σᵐ(t)`` of the covariance, frequency-resolved.

    Returns:
        Array of shape ``(len(times), 3)`` with columns ``xx, pp, xp``.

    Raises:
        QuadratureError: If a chunk of times misses its tolerance.

    """
    grid = np.asarray(times, dtype=float)
    result = np.zeros((grid.size, 3))
    if params.coupling == 0 or grid.size == 0:
        return result

    propagator = propagator or propagator_for(params)
    noise = NoiseSpectrum(params=params)
    upper = frequency_window(params)
    points = frequency_breakpoints(params, propagator, upper)

    positive = np.flatnonzero(grid > 0)
    for chunk in np.array_split(positive, max(1, -(-positive.size // TIME_CHUNK_SIZE))):
        if chunk.size == 0:
            continue
        chunk_times = grid[chunk]

        def integrand(omega: float, chunk_times: np.ndarray = chunk_times) -> np.ndarray:
            h, h_p = propagator.integrated_kernels(chunk_times, omega)
            weight = 0.5 * noise(omega)
            return weight * np.stack([np.abs(h) ** 2, np.abs(h_p) ** 2, (h * np.conj(h_p)).real])

        body = integrate_vector(
            integrand,
            0.0,
            upper,
            tol=tol,
            points=points,
            label=f"memory integral up to t={chunk_times[-1]:.4g}",
        )
        result[chunk] = (body.values + _memory_tail(propagator, noise, chunk_times, upper)).T
    return result


def transient_covariance(  # noqa: PLR0913
    params: ModelParams,
    initial: GaussianState,
    times: npt.ArrayLike,
    *,
    tol: float = TRANSIENT_TOLERANCE,
    allow_unstable: bool = False,
    label: str = "exact",
) -> Trajectory:
    """Exact moments after a factorised preparation of system and thermal bath.

    Args:
        params: Model parameters; the physical frequency is used.
        initial: Initial system state, possibly displaced.
        times: Strictly increasing grid starting at 0.
        tol: Tolerance of the frequency integral.
        allow_unstable: Evaluate finite-time dynamics of an unstable model.
        label: Trajectory label.

    Raises:
        UnstableModelError: If the model is unstable and ``allow_unstable`` is not set.
        QuadratureError: If the memory integral misses its tolerance.

    """
    grid = validate_time_grid(times)
    if not allow_unstable:
        _require_stable(params)
    propagator = propagator_for(params)

    g, dg, ddg = (propagator.kernel(grid, order) for order in range(3))
    start = grid == 0
    g, dg, ddg = np.where(start, 0.0, g), np.where(start, 1.0, dg), np.where(start, 0.0, ddg)
    xx0, pp0, xp0 = initial.xx, initial.pp, initial.xp
    xx = dg**2 * xx0 + 2.0 * dg * g * xp0 + g**2 * pp0
    pp = ddg**2 * xx0 + 2.0 * ddg * dg * xp0 + dg**2 * pp0
    xp = dg * ddg * xx0 + (dg**2 + g * ddg) * xp0 + g * dg * pp0

    memory = memory_integral(params, grid, tol=tol, propagator=propagator)
    xx, pp, xp = xx + memory[:, 0], pp + memory[:, 1], xp + memory[:, 2]

    mean_x = dg * initial.mean_x + g * initial.mean_p
    mean_p = ddg * initial.mean_x + dg * initial.mean_p
    moments = np.column_stack([mean_x, mean_p, xx + mean_x**2, pp + mean_p**2, 2.0 * (xp + mean_x * mean_p)])
    return Trajectory(times=grid, moments=moments, label=label)


def _lag_autocorrelations(propagator: Propagator, t: float, tau: float) -> np.ndarray:
    """``∫₀^{t-τ} gₐ(u + τ) g_b(u) du`` for ``(a, b)`` in ``(0,0), (1,1), (0,1)+(1,0)``, g₁ = g′."""
    roots, residues = propagator.roots, propagator.residues
    pair_sums = np.add.outer(roots, roots)
    with np.errstate(over="ignore", invalid="ignore"):
        overlap = np.expm1(pair_sums * (t - tau)) / pair_sums
    lagged = residues * np.exp(roots * tau)

    def correlation(a: int, b: int) -> float:
        left = lagged * roots**a
        right = residues * roots**b
        return float(np.real(left @ overlap @ right))

    return np.array([correlation(0, 0), correlation(1, 1), 0.5 * (correlation(0, 1) + correlation(1, 0))])


def memory_integral_time_domain(params: ModelParams, t: float, *, tol: float = ORACLE_TOLERANCE) -> np.ndarray:
    """Memory part ``Σᵐ(t)`` from the lag integral ``∫₀ᵗ μ(τ) R(τ) dτ``.

    Independent of ``memory_integral``: the double time integral over the noise kernel μ
    is reduced to one lag integral with closed-form autocorrelations R of g and g′. The
    xp entry averages the two orderings of its time arguments. Slow; meant for checks on
    short times.

    Returns:
        Array ``[xx, pp, xp]``.

    """
    if params.coupling == 0 or t == 0:
        return np.zeros(3)
    _require_stable(params)
    propagator = propagator_for(params)

    def integrand(tau: float) -> np.ndarray:
        return noise_kernel(params, tau, tol=tol * 1e-2) * _lag_autocorrelations(propagator, t, tau)

    result = integrate_vector(integrand, 0.0, t, tol=tol, label="time-domain memory integral")
    return result.values
