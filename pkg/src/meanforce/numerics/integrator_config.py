"""Integrator configuration for the moment equations."""

from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class IntegrationMethod(StrEnum):
    """Time-stepping method for linear moment equations."""

    RK45 = "RK45"
    DOP853 = "DOP853"
    Radau = "Radau"
    LSODA = "LSODA"
    MatrixExponential = "expm"

    @property
    def is_implicit(self) -> bool:
        """Whether the method benefits from an explicit Jacobian."""
        return self in {IntegrationMethod.Radau, IntegrationMethod.LSODA}


class IntegratorConfig(BaseModel):
    """Configuration for the moment-equation integrator.

    Args:
        method: ``scipy.integrate.solve_ivp`` method name, or ``expm`` to propagate the
            affine flow with matrix exponentials.
        rtol: Relative tolerance of the adaptive step control.
        atol: Absolute tolerance of the adaptive step control.
        max_step: Largest allowed step. None leaves the choice to the integrator.
        integrator_options: Raw ``solve_ivp`` options that override the common ones.

    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    method: IntegrationMethod = Field(default=IntegrationMethod.RK45, description="Time-stepping method.")
    rtol: float = Field(default=1e-9, gt=0, lt=1, description="Relative tolerance.")
    atol: float = Field(default=1e-12, gt=0, description="Absolute tolerance.")
    max_step: float | None = Field(default=None, gt=0, description="Maximum step size.")
    integrator_options: dict[str, Any] | None = Field(
        default=None,
        description="Raw solve_ivp options. Override the common options.",
    )

    @property
    def uses_matrix_exponential(self) -> bool:
        """Whether the flow is evaluated in closed form instead of stepped."""
        return self.method is IntegrationMethod.MatrixExponential

    def to_solve_ivp_options(self) -> dict[str, Any]:
        """Convert to keyword arguments for ``scipy.integrate.solve_ivp``.

        Entries in ``integrator_options`` take precedence over the common values.
        """
        options = self.model_dump(include={"rtol", "atol", "max_step"}, exclude_none=True)
        options["method"] = str(self.method)

        if self.integrator_options is not None:
            options.update(self.integrator_options)

        return options
