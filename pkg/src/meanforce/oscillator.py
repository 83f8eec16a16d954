"""Damped oscillator laboratory.

This module provides the DampedOscillator class, the main entry point for comparing
master-equation variants against the exact dynamics of one physical model.
"""

from functools import cached_property

import numpy.typing as npt

from meanforce.bath.coefficients import BathCoefficients, coefficients
from meanforce.bath.model_params import ModelParams
from meanforce.exact.covariances import TRANSIENT_TOLERANCE, propagator_for, steady_covariance, transient_covariance
from meanforce.exact.propagator import Propagator
from meanforce.exceptions import UnstableModelError
from meanforce.gaussian.fidelity import fidelity
from meanforce.gaussian.state import GaussianState
from meanforce.master_equations.evolution import evolve
from meanforce.master_equations.generators import generator_for
from meanforce.master_equations.moments import Trajectory
from meanforce.master_equations.steady_state import steady_state
from meanforce.numerics.integrator_config import IntegratorConfig
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE
from meanforce.utils.logging import get_logger
from meanforce.variants import VariantSpec

logger = get_logger(__name__)


class DampedOscillator:
    """One physical model and the dynamical descriptions compared on it.

    Bath coefficients are cached per Bohr frequency, so variants sharing a
    Hamiltonian share the principal-value quadratures.
    """

    def __init__(
        self,
        params: ModelParams,
        *,
        tol: float = DEFAULT_TOLERANCE,
        transient_tol: float = TRANSIENT_TOLERANCE,
        integrator: IntegratorConfig | None = None,
    ) -> None:
        """Initialize the laboratory.

        Args:
            params: Physical model. Its structural flags are overridden per variant.
            tol: Tolerance of the bath and steady-state quadratures.
            transient_tol: Tolerance of the exact memory integral.
            integrator: Integrator for the master equations. Uses defaults if not provided.

        """
        self._params = params
        self._tol = tol
        self._transient_tol = transient_tol
        self._integrator = integrator or IntegratorConfig()
        self._coefficients: dict[float, BathCoefficients] = {}

    @property
    def params(self) -> ModelParams:
        """Physical model."""
        return self._params

    def variant_params(self, variant: VariantSpec) -> ModelParams:
        """Model parameters with the variant's structural flags."""
        return variant.apply(self._params)

    def coefficients(self, variant: VariantSpec) -> BathCoefficients:
        """Bath coefficients at the variant's Bohr frequency."""
        params = self.variant_params(variant)
        key = params.bohr_frequency_sq
        if key not in self._coefficients:
            self._coefficients[key] = coefficients(params, tol=self._tol)
        return self._coefficients[key]

    @cached_property
    def propagator(self) -> Propagator:
        """Propagator of the exact dynamics."""
        return propagator_for(self._params)

    @cached_property
    def exact_steady_state(self) -> GaussianState:
        """Exact long-time state, the mean-force Gibbs state of the oscillator."""
        return steady_covariance(self._params, tol=self._tol)

    def is_stable(self, variant: VariantSpec) -> bool:
        """Whether the variant relaxes to a steady state."""
        if variant.is_exact:
            return self._params.is_stable
        params = self.variant_params(variant)
        if params.coupling == 0:
            return True
        return generator_for(params, self.coefficients(variant)).is_hurwitz

    def steady_state(self, variant: VariantSpec) -> GaussianState:
        """Steady state of a variant.

        Raises:
            UnstableModelError: If the variant has no stable steady state.

        """
        if variant.is_exact:
            return self.exact_steady_state
        params = self.variant_params(variant)
        coeffs = self.coefficients(variant) if params.coupling else None
        return steady_state(params, coeffs=coeffs, tol=self._tol)

    def fidelity_to_exact(self, variant: VariantSpec) -> float:
        """Fidelity between a variant's steady state and the exact one."""
        return fidelity(self.exact_steady_state, self.steady_state(variant))

    def dynamics(
        self,
        variant: VariantSpec,
        initial: GaussianState,
        times: npt.ArrayLike,
        *,
        allow_unstable: bool = False,
    ) -> Trajectory:
        """Moments of a variant on a time grid.

        Args:
            variant: Dynamical description.
            initial: Initial system state; the bath starts thermal and uncorrelated.
            times: Strictly increasing grid starting at 0.
            allow_unstable: Integrate variants without a stable steady state.

        Raises:
            UnstableModelError: If the variant is unstable and ``allow_unstable`` is not set.
            IntegrationError: If the master-equation integration fails.
            QuadratureError: If an integral misses its tolerance.

        """
        logger.info("Computing %s dynamics.", variant.label)
        if variant.is_exact:
            return transient_covariance(
                self._params,
                initial,
                times,
                tol=self._transient_tol,
                allow_unstable=allow_unstable,
                label=variant.label,
            )
        if not allow_unstable and not self.is_stable(variant):
            msg = f"Variant {variant.label} has no stable steady state for these parameters."
            raise UnstableModelError(msg)
        params = self.variant_params(variant)
        return evolve(
            params,
            initial,
            times,
            coeffs=self.coefficients(variant),
            integrator=self._integrator,
            label=variant.label,
        )
