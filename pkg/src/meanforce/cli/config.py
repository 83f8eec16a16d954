"""Run configuration read from TOML files and command-line flags.

A configuration file holds flat ``key = value`` pairs grouped in sections::

    variants = ["exact", "redfield_ls", "gkls_ls", "redfield_shifted", "gkls_shifted"]

    [model]
    omega0 = 1.0
    lambda = 0.1
    cutoff = 100.0
    temperature = 1.0
    counter_term = true

    [time]
    t_max = 200.0
    n_points = 401

Further sections are ``[initial]``, ``[sweep]``, ``[numerics]`` and ``[output]``. A
``[numerics.integrator_options]`` table is passed to ``solve_ivp`` unchanged.
Missing keys take the defaults of the corresponding model below.
"""

import argparse
import tomllib
from enum import StrEnum
from pathlib import Path
from typing import Any, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from meanforce.bath.model_params import ModelParams
from meanforce.exact.covariances import TRANSIENT_TOLERANCE
from meanforce.exceptions import MeanForceConfigError, MeanForceValidationError
from meanforce.gaussian.reference_states import thermal_state
from meanforce.gaussian.state import GaussianState
from meanforce.numerics.integrator_config import IntegrationMethod, IntegratorConfig
from meanforce.numerics.quadrature import DEFAULT_TOLERANCE
from meanforce.variants import DEFAULT_VARIANTS, Method, VariantSpec

CANONICAL_MODEL: dict[str, Any] = {
    "omega0": 1.0,
    "coupling": 0.1,
    "cutoff": 100.0,
    "temperature": 1.0,
    "counter_term": True,
}
SECTIONS = ("model", "time", "initial", "sweep", "numerics", "output")


class Spacing(StrEnum):
    """Spacing of a sweep axis."""

    Log = "log"
    Linear = "linear"


def _axis(minimum: float, maximum: float, points: int, spacing: Spacing) -> np.ndarray:
    if points == 1:
        return np.array([minimum])
    if spacing is Spacing.Log:
        return np.geomspace(minimum, maximum, points)
    return np.linspace(minimum, maximum, points)


class TimeGrid(BaseModel):
    """Uniform time grid ``[0, t_max]``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    t_max: float = Field(default=200.0, strict=True, gt=0, allow_inf_nan=False, description="Final time.")
    n_points: int = Field(default=401, strict=True, ge=2, description="Number of samples including t=0.")

    def values(self) -> np.ndarray:
        """Sample times."""
        return np.linspace(0.0, self.t_max, self.n_points)


class SweepSpec(BaseModel):
    """Temperature and coupling axes of a fidelity map.

    Without explicit coupling bounds the coupling axis spans the reorganisation ratio
    ``λΛ/ω₀²`` between ``reorganisation_ratio_min`` and ``reorganisation_ratio_max``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    temperature_min: float = Field(default=0.1, strict=True, gt=0)
    temperature_max: float = Field(default=10.0, strict=True, gt=0)
    temperature_points: int = Field(default=25, strict=True, ge=1)
    temperature_spacing: Spacing = Spacing.Log
    coupling_min: float | None = Field(default=None, strict=True, ge=0)
    coupling_max: float | None = Field(default=None, strict=True, ge=0)
    reorganisation_ratio_min: float = Field(default=0.01, strict=True, gt=0)
    reorganisation_ratio_max: float = Field(default=20.0, strict=True, gt=0)
    coupling_points: int = Field(default=25, strict=True, ge=1)
    coupling_spacing: Spacing = Spacing.Log
    workers: int = Field(default=1, strict=True, ge=1, description="Worker processes for the map.")

    @model_validator(mode="after")
    def _validate_ranges(self) -> Self:
        if (self.coupling_min is None) != (self.coupling_max is None):
            msg = "coupling_min and coupling_max must be given together."
            raise MeanForceConfigError(msg)
        ranges = {
            "temperature": (self.temperature_min, self.temperature_max, self.temperature_spacing),
            "reorganisation_ratio": (self.reorganisation_ratio_min, self.reorganisation_ratio_max, self.coupling_spacing),
        }
        if self.coupling_min is not None and self.coupling_max is not None:
            ranges["coupling"] = (self.coupling_min, self.coupling_max, self.coupling_spacing)
        for name, (minimum, maximum, spacing) in ranges.items():
            if minimum > maximum:
                msg = f"{name}_min ({minimum}) must be ≤ {name}_max ({maximum})."
                raise MeanForceConfigError(msg)
            if spacing is Spacing.Log and minimum <= 0:
                msg = f"{name}_min must be positive on a log axis, got {minimum}."
                raise MeanForceConfigError(msg)
        return self

    def temperatures(self) -> np.ndarray:
        """Temperature axis."""
        return _axis(self.temperature_min, self.temperature_max, self.temperature_points, self.temperature_spacing)

    def couplings(self, model: ModelParams) -> np.ndarray:
        """Coupling axis for the given model."""
        if self.coupling_min is not None and self.coupling_max is not None:
            return _axis(self.coupling_min, self.coupling_max, self.coupling_points, self.coupling_spacing)
        scale = model.omega0**2 / model.cutoff
        ratios = _axis(
            self.reorganisation_ratio_min,
            self.reorganisation_ratio_max,
            self.coupling_points,
            self.coupling_spacing,
        )
        return ratios * scale


class InitialStateSpec(BaseModel):
    """Initial system state: Gibbs state of the physical Hamiltonian, optionally displaced."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    temperature: float | None = Field(default=None, strict=True, ge=0, description="Defaults to the bath temperature.")
    mean_x: float = Field(default=0.0, strict=True, allow_inf_nan=False)
    mean_p: float = Field(default=0.0, strict=True, allow_inf_nan=False)

    def state(self, model: ModelParams) -> GaussianState:
        """Initial state for the given model."""
        temperature = model.temperature if self.temperature is None else self.temperature
        thermal = thermal_state(model.physical_frequency_sq, temperature)
        return thermal.model_copy(update={"mean_x": self.mean_x, "mean_p": self.mean_p})


class NumericsSpec(BaseModel):
    """Tolerances and integrator settings."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tol: float = Field(default=DEFAULT_TOLERANCE, strict=True, gt=0, lt=1)
    transient_tol: float = Field(default=TRANSIENT_TOLERANCE, strict=True, gt=0, lt=1)
    method: IntegrationMethod = IntegrationMethod.RK45
    rtol: float = Field(default=1e-9, strict=True, gt=0, lt=1)
    atol: float = Field(default=1e-12, strict=True, gt=0)
    max_step: float | None = Field(default=None, strict=True, gt=0)
    integrator_options: dict[str, Any] | None = None
    allow_unstable: bool = Field(default=False, strict=True)

    @property
    def integrator(self) -> IntegratorConfig:
        """Integrator configuration for the master equations."""
        return IntegratorConfig(
            method=self.method,
            rtol=self.rtol,
            atol=self.atol,
            max_step=self.max_step,
            integrator_options=self.integrator_options,
        )


class OutputSpec(BaseModel):
    """Destination of the CSV table; standard output when unset."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    path: Path | None = None


class RunConfig(BaseModel):
    """Everything a subcommand needs.

    Args:
        model: Physical model.
        variants: Dynamical descriptions to compare.
        time: Time grid of the dynamics.
        initial: Initial system state.
        sweep: Axes of the fidelity map.
        numerics: Tolerances and integrator.
        output: Output destination.

    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: ModelParams = Field(default_factory=lambda: ModelParams.model_validate(CANONICAL_MODEL))
    variants: tuple[VariantSpec, ...] = Field(default=DEFAULT_VARIANTS, min_length=1)
    time: TimeGrid = Field(default_factory=TimeGrid)
    initial: InitialStateSpec = Field(default_factory=InitialStateSpec)
    sweep: SweepSpec = Field(default_factory=SweepSpec)
    numerics: NumericsSpec = Field(default_factory=NumericsSpec)
    output: OutputSpec = Field(default_factory=OutputSpec)

    @field_validator("variants", mode="before")
    @classmethod
    def _parse_variant_labels(cls, value: Any) -> Any:  # noqa: ANN401
        if isinstance(value, list | tuple):
            return tuple(VariantSpec.from_label(item) if isinstance(item, str) else item for item in value)
        return value


def _model_section(section: dict[str, Any]) -> dict[str, Any]:
    values = dict(section)
    if "lambda" in values:
        values["coupling"] = values.pop("lambda")
    return {**CANONICAL_MODEL, **values}


def _describe(exc: ValidationError) -> str:
    lines = []
    for error in exc.errors():
        location = ".".join(str(part) for part in error["loc"])
        lines.append(f"[{location}] {error['msg']}")
    return "; ".join(lines)


def config_from_mapping(data: dict[str, Any]) -> RunConfig:
    """Build a configuration from parsed TOML content.

    Raises:
        MeanForceConfigError: If a section is unknown or a value is invalid.

    """
    unknown = set(data) - {*SECTIONS, "variants"}
    if unknown:
        msg = f"Unknown configuration keys or sections: {sorted(unknown)}."
        raise MeanForceConfigError(msg)

    values: dict[str, Any] = {key: data[key] for key in SECTIONS if key in data}
    values["model"] = _model_section(data.get("model", {}))
    if "variants" in data:
        values["variants"] = data["variants"]
    try:
        return RunConfig.model_validate(values)
    except ValidationError as exc:
        raise MeanForceConfigError(_describe(exc)) from exc
    except MeanForceConfigError:
        raise
    except MeanForceValidationError as exc:
        raise MeanForceConfigError(str(exc)) from exc


def load_config(path: Path | None) -> RunConfig:
    """Read a TOML configuration; ``None`` gives the canonical configuration.

    Raises:
        MeanForceConfigError: If the file is missing, malformed or invalid.

    """
    if path is None:
        return RunConfig()
    try:
        with path.open("rb") as handle:
            data = tomllib.load(handle)
    except FileNotFoundError as exc:
        msg = f"Configuration file {path} does not exist."
        raise MeanForceConfigError(msg) from exc
    except tomllib.TOMLDecodeError as exc:
        msg = f"Cannot parse {path}: {exc}"
        raise MeanForceConfigError(msg) from exc
    return config_from_mapping(data)


def _variant_override(args: argparse.Namespace) -> tuple[VariantSpec, ...] | None:
    method, secular, lamb_shift, shifted = (
        getattr(args, name, None) for name in ("method", "secular", "lamb_shift", "shifted")
    )
    if method is None and secular is None and lamb_shift is None and shifted is None:
        return None
    if method is None:
        method = Method.GKLS if secular else Method.Redfield
    method = Method(method)
    if method is Method.Exact:
        return (VariantSpec(method=method),)
    if secular is not None and secular != (method is Method.GKLS):
        msg = f"--method {method} contradicts --{'' if secular else 'no-'}secular."
        raise MeanForceConfigError(msg)
    return (
        VariantSpec(
            method=method,
            lamb_shift=True if lamb_shift is None else lamb_shift,
            shifted=bool(shifted),
        ),
    )


def apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """Apply command-line flags on top of a configuration.

    Variant flags (``--method``, ``--secular``, ``--lamb-shift``, ``--shifted``) replace
    the variant list by the single variant they describe.

    Raises:
        MeanForceConfigError: If an overridden value is invalid.

    """
    model_updates = {
        key: value
        for key, value in {
            "omega0": getattr(args, "omega0", None),
            "counter_term": getattr(args, "counter_term", None),
        }.items()
        if value is not None
    }
    time_updates = {
        key: value
        for key, value in {"t_max": getattr(args, "t_max", None), "n_points": getattr(args, "n_points", None)}.items()
        if value is not None
    }
    numerics_updates = {} if getattr(args, "tol", None) is None else {"tol": args.tol}
    variants = _variant_override(args)

    data = config.model_dump()
    data["model"] = {**config.model.model_dump(), **model_updates}
    data["time"] = {**data["time"], **time_updates}
    data["numerics"] = {**data["numerics"], **numerics_updates}
    data["variants"] = variants if variants is not None else config.variants
    if getattr(args, "out", None) is not None:
        data["output"] = {"path": args.out}
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise MeanForceConfigError(_describe(exc)) from exc
    except MeanForceConfigError:
        raise
    except MeanForceValidationError as exc:
        raise MeanForceConfigError(str(exc)) from exc
