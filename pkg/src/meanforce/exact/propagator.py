"""Closed-form propagator of the quantum Langevin equation.

With the dissipation kernel ``χ̂(s) = λΛ² / (s + Λ)`` the Laplace-domain response
``ĝ(s) = 1 / (s² + ω² - χ̂(s))`` is rational with the characteristic cubic

    s³ + Λ s² + ω² s + Λ(ω² - λΛ),

so ``g(t) = Σ_k c_k exp(s_k t)`` with residues ``c_k = (s_k + Λ) / ∏_{j≠k} (s_k - s_j)``.
When two roots nearly coincide the residue sums are replaced by divided differences,
evaluated as matrix functions of a bidiagonal matrix carrying the roots.
"""

from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.linalg import expm

from meanforce.exceptions import DegenerateRootsError, MeanForceNumericalError, MeanForceValidationError
from meanforce.utils.logging import get_logger

logger = get_logger(__name__)

DEGENERACY_TOLERANCE = 1e-9
NEAR_DEGENERACY_TOLERANCE = 1e-6
IDENTITY_TOLERANCE = 1e-10
NEWTON_STEPS = 3


class Propagator(BaseModel):
    """Roots and residues of the response function ĝ.

    Args:
        roots: The three characteristic roots, sorted by real then imaginary part.
        residues: Partial-fraction weights of ĝ at the roots.
        omega_eff_sq: Squared physical frequency.
        coupling: Coupling strength λ.
        cutoff: Spectral cutoff Λ.
        near_degenerate: Evaluate through divided differences instead of residues.

    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    roots: np.ndarray
    residues: np.ndarray
    omega_eff_sq: float
    coupling: float = Field(ge=0)
    cutoff: float = Field(gt=0)
    near_degenerate: bool = False

    @model_validator(mode="after")
    def _validate_shapes(self) -> Self:
        if self.roots.shape != (3,) or self.residues.shape != (3,):
            msg = f"Propagator needs three roots and residues, got {self.roots.shape} and {self.residues.shape}."
            raise MeanForceValidationError(msg)
        return self

    @property
    def is_stable(self) -> bool:
        """Whether every root lies in the open left half-plane."""
        return bool(np.all(self.roots.real < 0))

    @property
    def slowest_rate(self) -> float:
        """Smallest decay rate ``min_k |Re s_k|``."""
        return float(np.min(np.abs(self.roots.real)))

    @property
    def relaxation_time(self) -> float:
        """Inverse of the slowest decay rate."""
        return 1.0 / self.slowest_rate

    def _bidiagonal(self) -> np.ndarray:
        matrix = np.diag(self.roots.astype(complex))
        matrix[0, 1] = matrix[1, 2] = 1.0
        return matrix

    def _numerator(self, matrix: np.ndarray) -> np.ndarray:
        return matrix + self.cutoff * np.eye(3)

    def kernel(self, t: npt.ArrayLike, order: int = 0) -> np.ndarray:
        """Return ``dⁿg/dtⁿ = Σ_k c_k s_kⁿ exp(s_k t)``.

        Args:
            t: Times, ``t ≥ 0``.
            order: Derivative order n.

        """
        times = np.asarray(t, dtype=float)
        if self.near_degenerate:
            matrix = self._bidiagonal()
            weight = self._numerator(matrix) @ np.linalg.matrix_power(matrix, order)
            values = np.array([(weight @ expm(matrix * time))[0, 2] for time in times.ravel()])
            return values.real.reshape(times.shape)
        weights = self.residues * self.roots**order
        with np.errstate(over="ignore", invalid="ignore"):
            values = np.exp(np.multiply.outer(times, self.roots)) @ weights
        return values.real

    def integrated_kernels(self, t: npt.ArrayLike, omega: float) -> tuple[np.ndarray, np.ndarray]:
        """Finite-time Fourier integrals of ``g`` and ``g′``.

        Returns:
            ``h(t, ω) = ∫₀ᵗ g(u) exp(iωu) du`` and ``h_p(t, ω) = ∫₀ᵗ g′(u) exp(iωu) du``.

        """
        times = np.asarray(t, dtype=float)
        if self.near_degenerate:
            return self._integrated_kernels_divided(times, omega)
        shifted = self.roots + 1j * omega
        safe = np.where(shifted == 0, 1.0, shifted)
        with np.errstate(over="ignore", invalid="ignore"):
            exponent = np.multiply.outer(times, shifted)
            integrals = np.where(shifted == 0, times[..., np.newaxis], np.expm1(exponent) / safe)
        return integrals @ self.residues, integrals @ (self.residues * self.roots)

    def _integrated_kernels_divided(self, times: np.ndarray, omega: float) -> tuple[np.ndarray, np.ndarray]:
        matrix = self._bidiagonal()
        numerator = self._numerator(matrix)
        block = np.zeros((6, 6), dtype=complex)
        block[:3, :3] = matrix + 1j * omega * np.eye(3)
        block[:3, 3:] = np.eye(3)
        position = np.empty(times.size, dtype=complex)
        momentum = np.empty(times.size, dtype=complex)
        for index, time in enumerate(times.ravel()):
            integral = expm(block * time)[:3, 3:]
            position[index] = (numerator @ integral)[0, 2]
            momentum[index] = (numerator @ matrix @ integral)[0, 2]
        return position.reshape(times.shape), momentum.reshape(times.shape)

    def matrix(self, t: npt.ArrayLike) -> np.ndarray:
        """Phase-space propagator ``G(t) = [[g′, g], [g″, g′]]`` with shape ``(..., 2, 2)``."""
        g, dg, ddg = (self.kernel(t, order) for order in range(3))
        return np.stack([np.stack([dg, g], axis=-1), np.stack([ddg, dg], axis=-1)], axis=-2)

    def transfer_function(self, omega: npt.ArrayLike) -> np.ndarray:
        """Return ``ĝ(iω)`` from the rational form."""
        frequency = np.asarray(omega, dtype=float)
        memory = self.coupling * self.cutoff**2 / (1j * frequency + self.cutoff)
        return 1.0 / (self.omega_eff_sq - frequency**2 - memory)

    def transfer_function_from_residues(self, omega: npt.ArrayLike) -> np.ndarray:
        """Return ``ĝ(iω) = Σ_k c_k / (iω - s_k)``."""
        frequency = np.asarray(omega, dtype=float)
        if self.near_degenerate:
            matrix = self._bidiagonal()
            numerator = self._numerator(matrix)
            values = [
                (numerator @ np.linalg.inv(1j * w * np.eye(3) - matrix))[0, 2] for w in frequency.ravel()
            ]
            return np.asarray(values).reshape(frequency.shape)
        return (1.0 / (1j * np.multiply.outer(frequency, np.ones(3)) - self.roots)) @ self.residues


def _cubic_roots(a2: float, a1: float, a0: float) -> np.ndarray:
    """Roots of ``s³ + a2 s² + a1 s + a0`` by the trigonometric or Cardano formulas."""
    shift = a2 / 3.0
    p = a1 - a2**2 / 3.0
    q = 2.0 * a2**3 / 27.0 - a2 * a1 / 3.0 + a0
    discriminant = (q / 2.0) ** 2 + (p / 3.0) ** 3

    if discriminant > 0:
        root = np.sqrt(discriminant)
        u = np.cbrt(-q / 2.0 + root)
        v = np.cbrt(-q / 2.0 - root)
        real = -(u + v) / 2.0
        imag = np.sqrt(3.0) / 2.0 * (u - v)
        depressed = np.array([u + v, real + 1j * imag, real - 1j * imag])
    elif p == 0:
        depressed = np.zeros(3, dtype=complex)
    else:
        radius = 2.0 * np.sqrt(-p / 3.0)
        angle = np.arccos(np.clip(3.0 * q / (p * radius), -1.0, 1.0)) / 3.0
        depressed = radius * np.cos(angle - 2.0 * np.pi * np.arange(3) / 3.0) + 0j
    return depressed - shift


def _polish(roots: np.ndarray, coefficients: np.ndarray) -> np.ndarray:
    derivative = np.polyder(coefficients)
    polished = roots.copy()
    for index, root in enumerate(roots):
        current = root
        residual = abs(np.polyval(coefficients, current))
        for _ in range(NEWTON_STEPS):
            slope = np.polyval(derivative, current)
            if slope == 0:
                break
            candidate = current - np.polyval(coefficients, current) / slope
            candidate_residual = abs(np.polyval(coefficients, candidate))
            if candidate_residual >= residual:
                break
            current, residual = candidate, candidate_residual
        polished[index] = current
    return polished


def _conjugate_pair(roots: np.ndarray) -> np.ndarray:
    """Force exact conjugate symmetry of a real-coefficient cubic's roots."""
    complex_roots = roots[np.abs(roots.imag) > 0]
    if complex_roots.size == 0:
        return roots.real + 0j
    upper = complex_roots[np.argmax(complex_roots.imag)]
    real_root = roots[np.argmin(np.abs(roots.imag))].real
    return np.array([real_root, upper, np.conj(upper)])


def characteristic_roots(omega_eff_sq: float, coupling: float, cutoff: float) -> Propagator:
    """Solve the characteristic cubic and build the propagator.

    Args:
        omega_eff_sq: Squared physical frequency.
        coupling: Coupling strength λ ≥ 0.
        cutoff: Spectral cutoff Λ > 0.

    Raises:
        MeanForceValidationError: If ``coupling`` is negative or ``cutoff`` is not positive.
        DegenerateRootsError: If two roots coincide to relative precision 1e-9.
        MeanForceNumericalError: If the residues violate ``Σc = 0`` or ``Σcs = 1``.

    """
    if coupling < 0 or cutoff <= 0:
        msg = f"Need λ ≥ 0 and Λ > 0, got λ={coupling} and Λ={cutoff}."
        raise MeanForceValidationError(msg)

    polynomial = np.array([1.0, cutoff, omega_eff_sq, cutoff * (omega_eff_sq - coupling * cutoff)])
    roots = _conjugate_pair(_polish(_cubic_roots(*polynomial[1:]), polynomial))
    roots = np.sort_complex(roots)

    scale = float(np.max(np.abs(roots)))
    separation = min(abs(roots[i] - roots[j]) for i in range(3) for j in range(i + 1, 3))
    relative = separation / scale if scale > 0 else 0.0
    if relative < DEGENERACY_TOLERANCE:
        msg = f"Characteristic roots {roots} are degenerate (relative separation {relative:.2e}); perturb λ."
        raise DegenerateRootsError(msg)
    near_degenerate = relative < NEAR_DEGENERACY_TOLERANCE
    if near_degenerate:
        logger.warning("Characteristic roots nearly degenerate (relative separation %.2e).", relative)

    residues = np.array(
        [(roots[k] + cutoff) / np.prod([roots[k] - roots[j] for j in range(3) if j != k]) for k in range(3)],
    )
    propagator = Propagator(
        roots=roots,
        residues=residues,
        omega_eff_sq=omega_eff_sq,
        coupling=coupling,
        cutoff=cutoff,
        near_degenerate=near_degenerate,
    )
    if not near_degenerate:
        _check_identities(propagator)
    return propagator


def _check_identities(propagator: Propagator) -> None:
    residues, roots = propagator.residues, propagator.roots
    total = abs(np.sum(residues))
    slope = abs(np.sum(residues * roots) - 1.0)
    total_scale = max(1.0, float(np.sum(np.abs(residues))))
    slope_scale = max(1.0, float(np.sum(np.abs(residues * roots))))
    if total > IDENTITY_TOLERANCE * total_scale or slope > IDENTITY_TOLERANCE * slope_scale:
        msg = f"Residues violate g(0)=0 or g′(0)=1 (|Σc|={total:.2e}, |Σcs-1|={slope:.2e})."
        raise MeanForceNumericalError(msg)


def g_of_t(propagator: Propagator, t: npt.ArrayLike, derivative: int = 0) -> np.ndarray:
    """Response function ``g`` or one of its time derivatives."""
    return propagator.kernel(t, derivative)


def g_hat(propagator: Propagator, omega: npt.ArrayLike) -> np.ndarray:
    """Fourier response ``ĝ(iω) = 1 / (ω_eff² - ω² - λΛ² / (iω + Λ))``, evaluated from the rational form."""
    return propagator.transfer_function(omega)
