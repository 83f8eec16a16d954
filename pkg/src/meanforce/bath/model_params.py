"""Physical parameters and structural flags of the damped oscillator model.

Units are chosen so that the reduced Planck constant, the Boltzmann constant and the
oscillator mass are all one.
"""

from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field

from meanforce.exceptions import UnconfinedPotentialError


class ModelParams(BaseModel):
    """Oscillator linearly coupled by position to a bath with an algebraic-Ohmic spectral density.

    The spectral density is ``J(ω) = λ ω / (1 + (ω/Λ)²)`` and its reorganisation
    energy (the bath-induced frequency renormalisation) is ``λΛ``.

    Args:
        omega0: Bare trap frequency ω₀.
        coupling: Coupling strength λ. Accepted under the alias ``lambda``.
        cutoff: Spectral cutoff Λ.
        temperature: Bath temperature, zero allowed.
        counter_term: Add ``+λΛ x²/2`` to the physical Hamiltonian.
        lamb_shift: Keep the principal-value terms in the master equations.
        secular: Use the GKLS (secular) form instead of Bloch-Redfield.
        shifted: Build the master equation on the mean-force frequency, i.e. with
            ``λΛ`` removed from the squared physical frequency.

    """

    model_config = ConfigDict(frozen=True, extra="forbid", validate_by_name=True, validate_by_alias=True)

    omega0: float = Field(
        default=1.0,
        strict=True,
        gt=0,
        allow_inf_nan=False,
        description="Bare trap frequency.",
    )
    coupling: float = Field(
        strict=True,
        ge=0,
        allow_inf_nan=False,
        alias="lambda",
        description="Coupling strength λ.",
    )
    cutoff: float = Field(
        strict=True,
        gt=0,
        allow_inf_nan=False,
        description="Spectral cutoff Λ.",
    )
    temperature: float = Field(
        strict=True,
        ge=0,
        allow_inf_nan=False,
        description="Bath temperature.",
    )
    counter_term: bool = Field(default=False, strict=True, description="Include the counter-term.")
    lamb_shift: bool = Field(default=True, strict=True, description="Keep the Lamb-shift terms.")
    secular: bool = Field(default=False, strict=True, description="Use the secular (GKLS) form.")
    shifted: bool = Field(default=False, strict=True, description="Use the mean-force Hamiltonian.")

    @property
    def reorganisation(self) -> float:
        """Frequency renormalisation ``λΛ`` of the squared trap frequency."""
        return self.coupling * self.cutoff

    @property
    def physical_frequency_sq(self) -> float:
        """Squared frequency of the physical system Hamiltonian."""
        if self.counter_term:
            return self.omega0**2 + self.reorganisation
        return self.omega0**2

    @property
    def mean_force_frequency_sq(self) -> float:
        """Squared frequency of the classical mean-force Hamiltonian."""
        return self.physical_frequency_sq - self.reorganisation

    @property
    def bohr_frequency_sq(self) -> float:
        """Squared frequency of the Hamiltonian the master equation is built on.

        Raises:
            UnconfinedPotentialError: If the squared frequency is not positive.

        """
        omega_sq = self.mean_force_frequency_sq if self.shifted else self.physical_frequency_sq
        if omega_sq <= 0:
            msg = (
                f"Squared Bohr frequency {omega_sq:.6g} is not positive "
                f"(ω₀²={self.omega0**2:.6g}, λΛ={self.reorganisation:.6g}, counter_term={self.counter_term})."
            )
            raise UnconfinedPotentialError(msg)
        return omega_sq

    @property
    def bohr_frequency(self) -> float:
        """Bohr frequency of the master-equation Hamiltonian."""
        return self.bohr_frequency_sq**0.5

    @property
    def is_stable(self) -> bool:
        """Whether the exact coupled dynamics relax to a steady state."""
        return self.mean_force_frequency_sq > 0

    def with_flags(self, **updates: Any) -> Self:  # noqa: ANN401
        """Return a validated copy with some fields replaced."""
        return type(self).model_validate({**self.model_dump(), **updates})
