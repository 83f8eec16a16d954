"""Uhlmann fidelity between single-mode Gaussian states."""

import numpy as np

from meanforce.exceptions import MeanForceDomainError
from meanforce.gaussian.state import GaussianState

FIDELITY_PHYSICALITY_TOLERANCE = 1e-10


def _validate_fidelity_input(state: GaussianState, name: str) -> None:
    if state.is_displaced:
        msg = f"Fidelity is only implemented for centred states; {name} has mean {state.mean.tolist()}."
        raise MeanForceDomainError(msg)
    if state.xx <= 0 or state.determinant < 0.25 - FIDELITY_PHYSICALITY_TOLERANCE:
        msg = f"{name} violates the uncertainty relation (det = {state.determinant:.12g} < 1/4)."
        raise MeanForceDomainError(msg)


def fidelity(first: GaussianState, second: GaussianState) -> float:
    """Fidelity of two centred single-mode Gaussian states.

    With ``κ = 4 det(Σ₁ + Σ₂)`` and ``Υ = (4 det Σ₁ - 1)(4 det Σ₂ - 1)``,
    ``F = 2 / (√(κ + Υ) - √Υ)``, evaluated as ``2(√(κ + Υ) + √Υ) / κ`` to avoid
    cancellation for strongly mixed states.

    Raises:
        MeanForceDomainError: If a state is displaced or unphysical.

    """
    _validate_fidelity_input(first, "first state")
    _validate_fidelity_input(second, "second state")

    summed = GaussianState(xx=first.xx + second.xx, pp=first.pp + second.pp, xp=first.xp + second.xp)
    kappa = 4.0 * summed.determinant
    upsilon = max((4.0 * first.determinant - 1.0) * (4.0 * second.determinant - 1.0), 0.0)
    value = 2.0 * (np.sqrt(kappa + upsilon) + np.sqrt(upsilon)) / kappa
    return float(min(value, 1.0))
