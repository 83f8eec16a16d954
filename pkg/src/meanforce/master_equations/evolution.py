"""Time evolution of the moments under a master equation."""

import numpy as np
import numpy.typing as npt
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from meanforce.bath.coefficients import BathCoefficients, coefficients
from meanforce.bath.model_params import ModelParams
from meanforce.exceptions import IntegrationError
from meanforce.gaussian.state import GaussianState
from meanforce.master_equations.generators import LinearGenerator, generator_for
from meanforce.master_equations.moments import MomentState, Trajectory, validate_time_grid
from meanforce.numerics.integrator_config import IntegratorConfig
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE
from meanforce.utils.logging import get_logger

logger = get_logger(__name__)


def propagate_exactly(generator: LinearGenerator, initial: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Solve ``dy/dt = M y + b`` in closed form on a time grid.

    Returns:
        Array of shape ``(len(times), 5)``.

    """
    augmented = generator.augmented
    start = np.append(initial, 1.0)
    return np.stack([(expm(augmented * t) @ start)[:5] for t in times])


def _integrate(generator: LinearGenerator, initial: np.ndarray, times: np.ndarray, config: IntegratorConfig) -> np.ndarray:
    options = config.to_solve_ivp_options()
    if config.method.is_implicit:
        options["jac"] = generator.matrix
    if times.size == 1:
        return initial[np.newaxis, :]

    solution = solve_ivp(generator, (0.0, float(times[-1])), initial, t_eval=times, **options)
    if not solution.success or solution.y.shape[1] != times.size:
        last_time = float(solution.t[-1]) if solution.t.size else 0.0
        msg = f"{generator.label} integration stopped at t={last_time:.6g}: {solution.message}"
        raise IntegrationError(msg, last_time=last_time)
    logger.debug("%s integrated with %d right-hand side evaluations.", generator.label, solution.nfev)
    return solution.y.T


def evolve(  # noqa: PLR0913
    variant: ModelParams,
    initial: GaussianState | MomentState,
    times: npt.ArrayLike,
    *,
    coeffs: BathCoefficients | None = None,
    integrator: IntegratorConfig | None = None,
    tol: float = DEFAULT_TOLERANCE,
    label: str | None = None,
) -> Trajectory:
    """Integrate the master equation selected by ``variant`` from an initial state.

    The Bloch-Redfield equation is used when ``variant.secular`` is false, the GKLS
    equation otherwise. The generator is time-independent, so the coefficients are
    evaluated once.

    Args:
        variant: Model parameters with the structural flags set.
        initial: Initial Gaussian state or raw moments.
        times: Strictly increasing grid starting at 0.
        coeffs: Precomputed coefficients at the variant's Bohr frequency.
        integrator: Integrator configuration. Uses defaults if not provided.
        tol: Quadrature tolerance for the coefficients.
        label: Trajectory label. Defaults to the generator name.

    Raises:
        IntegrationError: If the integrator gives up; carries the last accepted time.

    """
    grid = validate_time_grid(times)
    config = integrator or IntegratorConfig()
    generator = generator_for(variant, coeffs if coeffs is not None else coefficients(variant, tol=tol))
    moments = initial if isinstance(initial, MomentState) else MomentState.from_gaussian(initial)
    start = moments.to_vector()

    if config.uses_matrix_exponential:
        values = propagate_exactly(generator, start, grid)
    else:
        values = _integrate(generator, start, grid, config)
    return Trajectory(times=grid, moments=values, label=label or generator.label)
