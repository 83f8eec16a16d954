"""Dynamical descriptions of the damped oscillator compared by the lab.

A variant pairs a dynamical method (exact Gaussian dynamics, the Bloch-Redfield
equation or its secular GKLS form) with the two structural flags that decide which
Hamiltonian the master equation is built on. Variants are addressed by labels such
as ``redfield_ls`` or ``gkls_shifted``.
"""

from enum import StrEnum
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from meanforce.bath.model_params import ModelParams
from meanforce.exceptions import MeanForceConfigError


class Method(StrEnum):
    """Dynamical method."""

    Exact = "exact"
    Redfield = "redfield"
    GKLS = "gkls"


_LAMB_SHIFT_TOKEN = "ls"
_SHIFTED_TOKEN = "shifted"


class VariantSpec(BaseModel):
    """One dynamical description of the oscillator.

    Args:
        method: Exact dynamics, Bloch-Redfield or its secular (GKLS) form.
        lamb_shift: Keep the principal-value part of the bath correlations.
        shifted: Build the master equation on the mean-force frequency instead of the
            physical one.

    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    method: Method = Field(description="Dynamical method.")
    lamb_shift: bool = Field(default=True, description="Keep the Lamb-shift terms.")
    shifted: bool = Field(default=False, description="Use the mean-force system Hamiltonian.")

    @model_validator(mode="after")
    def _validate_exact_flags(self) -> Self:
        if self.method is Method.Exact and (self.shifted or not self.lamb_shift):
            msg = "Exact dynamics take no Lamb-shift or shifted-Hamiltonian flags."
            raise MeanForceConfigError(msg)
        return self

    @property
    def label(self) -> str:
        """Column label such as ``exact``, ``gkls_ls`` or ``redfield_shifted``."""
        if self.method is Method.Exact:
            return str(self.method)
        tokens = [str(self.method)]
        if self.shifted:
            tokens.append(_SHIFTED_TOKEN)
        if self.lamb_shift:
            tokens.append(_LAMB_SHIFT_TOKEN)
        return "_".join(tokens)

    @property
    def is_exact(self) -> bool:
        """Whether this is the exact Gaussian dynamics."""
        return self.method is Method.Exact

    @classmethod
    def from_label(cls, label: str) -> "VariantSpec":
        """Parse a label produced by ``label``.

        Raises:
            MeanForceConfigError: If the label is not recognised.

        """
        method_token, *flag_tokens = label.strip().lower().split("_")
        flags = set(flag_tokens)
        try:
            method = Method(method_token)
        except ValueError as exc:
            msg = f"Unknown variant '{label}': method must be one of {[str(m) for m in Method]}."
            raise MeanForceConfigError(msg) from exc
        unknown = flags - {_LAMB_SHIFT_TOKEN, _SHIFTED_TOKEN}
        if unknown or len(flags) != len(flag_tokens):
            msg = f"Unknown variant '{label}': unexpected flags {sorted(unknown) or flag_tokens}."
            raise MeanForceConfigError(msg)
        if method is Method.Exact:
            if flags:
                msg = f"Variant '{label}': exact dynamics take no flags."
                raise MeanForceConfigError(msg)
            return cls(method=method)
        return cls(method=method, lamb_shift=_LAMB_SHIFT_TOKEN in flags, shifted=_SHIFTED_TOKEN in flags)

    def apply(self, params: ModelParams) -> ModelParams:
        """Return the model parameters with this variant's structural flags set."""
        if self.is_exact:
            return params
        return params.with_flags(
            secular=self.method is Method.GKLS,
            lamb_shift=self.lamb_shift,
            shifted=self.shifted,
        )


DEFAULT_VARIANTS: tuple[VariantSpec, ...] = (
    VariantSpec(method=Method.Exact),
    VariantSpec(method=Method.Redfield, lamb_shift=True),
    VariantSpec(method=Method.GKLS, lamb_shift=True),
    VariantSpec(method=Method.Redfield, lamb_shift=False, shifted=True),
    VariantSpec(method=Method.GKLS, lamb_shift=False, shifted=True),
)
