"""Subcommands of the meanforce command line.

Each command takes a validated ``RunConfig`` and returns the table it emits.
"""

import multiprocessing
from itertools import product

import numpy as np
import pandas as pd
import xarray as xr

from meanforce.bath.coefficients import BathCoefficients, lamb_shift
from meanforce.bath.model_params import ModelParams
from meanforce.cli.config import RunConfig
from meanforce.exceptions import (
    MeanForceDomainError,
    MeanForceNumericalError,
    UnconfinedPotentialError,
    UnstableModelError,
)
from meanforce.gaussian.fidelity import fidelity
from meanforce.master_equations.generators import correction_hamiltonian
from meanforce.oscillator import DampedOscillator
from meanforce.utils.logging import get_logger
from meanforce.variants import Method, VariantSpec

logger = get_logger(__name__)

STABLE = "stable"
UNSTABLE = "unstable"
UNCONFINED = "unconfined"
UNPHYSICAL = "unphysical"

COEFFICIENT_COLUMNS = (
    "variant",
    "omega_bohr",
    "gamma_plus",
    "gamma_minus",
    "shift_plus",
    "shift_minus",
    "delta",
    "sigma",
    "sigma_prime",
    "delta_prime",
    "reorganisation",
    "s_zero",
    "lamb_to_decay_ratio",
    "lamb_potential_shift",
    "verdict",
)
STEADY_COLUMNS = ("variant", "omega_bohr", "xx", "pp", "xp", "fidelity", "verdict")

FIDELITY_MAP_VARIANTS: dict[str, VariantSpec] = {
    "fidelity_redfield_LS": VariantSpec(method=Method.Redfield, lamb_shift=True),
    "fidelity_gkls": VariantSpec(method=Method.GKLS, lamb_shift=True),
    "fidelity_shifted_noLS": VariantSpec(method=Method.Redfield, lamb_shift=False, shifted=True),
}


def _oscillator(config: RunConfig, model: ModelParams | None = None) -> DampedOscillator:
    return DampedOscillator(
        model or config.model,
        tol=config.numerics.tol,
        transient_tol=config.numerics.transient_tol,
        integrator=config.numerics.integrator,
    )


def _coefficient_row(
    oscillator: DampedOscillator,
    variant: VariantSpec,
    s_zero: float,
) -> dict[str, object]:
    params = oscillator.variant_params(variant)
    row: dict[str, object] = dict.fromkeys(COEFFICIENT_COLUMNS, np.nan)
    row.update(variant=variant.label, reorganisation=params.reorganisation, s_zero=s_zero)
    try:
        coeffs: BathCoefficients = oscillator.coefficients(variant)
    except MeanForceDomainError:
        row["verdict"] = UNCONFINED
        return row
    row.update(coeffs.model_dump(exclude={"reorganisation"}))
    row["lamb_to_decay_ratio"] = coeffs.lamb_to_decay_ratio
    row["lamb_potential_shift"] = correction_hamiltonian(
        coeffs,
        params.bohr_frequency_sq,
        secular=params.secular,
    ).potential_shift
    row["verdict"] = STABLE if oscillator.is_stable(variant) else UNSTABLE
    return row


def cmd_coefficients(config: RunConfig) -> pd.DataFrame:
    """Bath coefficients at each variant's Bohr frequency, with a stability verdict.

    The exact row is evaluated at the physical frequency and its verdict is the
    stability of the exact dynamics.
    """
    oscillator = _oscillator(config)
    s_zero = lamb_shift(0.0, config.model, tol=config.numerics.tol)
    rows = [_coefficient_row(oscillator, variant, s_zero) for variant in config.variants]
    return pd.DataFrame(rows, columns=list(COEFFICIENT_COLUMNS))


def cmd_dynamics(config: RunConfig) -> pd.DataFrame:
    """Second moments of every variant on the configured time grid.

    Columns are ``t`` followed by ``<label>_xx, <label>_pp, <label>_xp`` per variant.

    Raises:
        UnstableModelError: If a variant is unstable and unstable runs are not allowed.
        MeanForceNumericalError: If an integration or quadrature fails.

    """
    oscillator = _oscillator(config)
    initial = config.initial.state(config.model)
    times = config.time.values()
    columns: dict[str, np.ndarray] = {"t": times}
    for variant in config.variants:
        frame = oscillator.dynamics(
            variant,
            initial,
            times,
            allow_unstable=config.numerics.allow_unstable,
        ).to_dataframe()
        for moment in ("xx", "pp", "xp"):
            columns[f"{variant.label}_{moment}"] = frame[moment].to_numpy()
    return pd.DataFrame(columns)


def _steady_row(oscillator: DampedOscillator, variant: VariantSpec, *, allow_unstable: bool) -> dict[str, object]:
    row: dict[str, object] = dict.fromkeys(STEADY_COLUMNS, np.nan)
    row["variant"] = variant.label
    try:
        params = oscillator.variant_params(variant)
        omega_sq = params.physical_frequency_sq if variant.is_exact else params.bohr_frequency_sq
        row["omega_bohr"] = float(np.sqrt(omega_sq))
        state = oscillator.steady_state(variant)
    except (UnstableModelError, UnconfinedPotentialError):
        if variant.is_exact or not allow_unstable:
            raise
        logger.warning("Variant %s has no stable steady state.", variant.label)
        row["verdict"] = UNSTABLE
        return row

    row.update(xx=state.xx, pp=state.pp, xp=state.xp, verdict=STABLE)
    try:
        row["fidelity"] = fidelity(oscillator.exact_steady_state, state)
    except MeanForceDomainError as exc:
        logger.warning("Steady state of %s is not a physical state: %s", variant.label, exc)
        row["verdict"] = UNPHYSICAL
    return row


def cmd_steady(config: RunConfig) -> pd.DataFrame:
    """Steady states of the exact dynamics and of every variant, with fidelities to the exact one.

    Raises:
        UnstableModelError: If the exact model, or a variant while unstable runs are not
            allowed, has no steady state.
        MeanForceNumericalError: If a quadrature fails.

    """
    oscillator = _oscillator(config)
    variants = (VariantSpec(method=Method.Exact), *(v for v in config.variants if not v.is_exact))
    rows = [_steady_row(oscillator, variant, allow_unstable=config.numerics.allow_unstable) for variant in variants]
    return pd.DataFrame(rows, columns=list(STEADY_COLUMNS))


def fidelity_point(model: ModelParams, temperature: float, coupling: float, tol: float) -> tuple[float, ...]:
    """Fidelities of the mapped variants at one grid point.

    Returns:
        One fidelity per entry of ``FIDELITY_MAP_VARIANTS`` followed by 1.0 when every
        state exists and 0.0 otherwise. Missing fidelities are NaN.

    """
    params = model.with_flags(temperature=float(temperature), coupling=float(coupling))
    oscillator = DampedOscillator(params, tol=tol)
    values = []
    try:
        exact = oscillator.exact_steady_state
    except (MeanForceNumericalError, MeanForceDomainError) as exc:
        logger.warning("No exact steady state at T=%.4g, λ=%.4g: %s", temperature, coupling, exc)
        return (*([np.nan] * len(FIDELITY_MAP_VARIANTS)), 0.0)
    for variant in FIDELITY_MAP_VARIANTS.values():
        try:
            values.append(fidelity(exact, oscillator.steady_state(variant)))
        except (MeanForceNumericalError, MeanForceDomainError) as exc:
            logger.warning("%s failed at T=%.4g, λ=%.4g: %s", variant.label, temperature, coupling, exc)
            values.append(np.nan)
    stable = float(not np.any(np.isnan(values)))
    return (*values, stable)


def cmd_fidelity_map(config: RunConfig) -> pd.DataFrame:
    """Fidelity of the mapped variants to the exact steady state over a (T, λ) grid.

    Grid points without a stable steady state get NaN fidelities and ``stable = False``.
    Rows run over λ fastest.
    """
    sweep = config.sweep
    temperatures = sweep.temperatures()
    couplings = sweep.couplings(config.model)
    arguments = [(config.model, t, c, config.numerics.tol) for t, c in product(temperatures, couplings)]
    logger.info("Fidelity map over %d points with %d worker(s).", len(arguments), sweep.workers)

    if sweep.workers > 1:
        with multiprocessing.Pool(sweep.workers) as pool:
            results = pool.starmap(fidelity_point, arguments)
    else:
        results = [fidelity_point(*point) for point in arguments]

    grid = np.asarray(results, dtype=float).reshape(temperatures.size, couplings.size, -1)
    dataset = xr.Dataset(
        {name: (("T", "lambda"), grid[..., index]) for index, name in enumerate(FIDELITY_MAP_VARIANTS)},
        coords={"T": temperatures, "lambda": couplings},
    )
    dataset["stable"] = (("T", "lambda"), grid[..., -1] > 0)
    return dataset.to_dataframe().reset_index()
