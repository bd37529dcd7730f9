"""
Microcausal Pinching

The pinching of b by the spectral projectors of a Hermitian a,
b -> sum_l P_l b P_l, fixes b exactly when b is block diagonal in the
eigenbasis of a, i.e. when [a, b] = 0. Both residuals are reported and
their agreement is checked.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from microcausal.core.operator import Operator, frobenius_norm, operator_norm
from microcausal.errors import DimensionMismatch
from microcausal.quantum.states import Observable

logger = logging.getLogger(__name__)

PINCHING_TOL = 1e-8


@dataclass(frozen=True)
class Pinched:
    residual: float
    commutator_residual: float
    consistent: bool

    @property
    def pinched(self) -> bool:
        return True


@dataclass(frozen=True)
class NotPinched:
    residual: float
    commutator_residual: float
    consistent: bool

    @property
    def pinched(self) -> bool:
        return False


PinchingResult = Union[Pinched, NotPinched]


def pinch(a: Observable, b: Operator) -> Operator:
    out = np.zeros_like(b.matrix)
    for p in a.spectral.projectors:
        out += p.matrix @ b.matrix @ p.matrix
    return Operator(out)


def pinching_check(
    a: Observable,
    b: Operator,
    tol: float = PINCHING_TOL,
    commutator_tol: Optional[float] = None,
) -> PinchingResult:
    """
    Pinched iff ||sum P b P - b||_F <= tol * ||b||_F.

    The commutator residual ||[a, b]||_F / (2 ||a||_op ||b||_F) is compared
    with commutator_tol (default tol); `consistent` records whether both
    tests agree.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"observable dim {a.dim} vs operator dim {b.dim}")
    b_norm = frobenius_norm(b)
    if b_norm == 0.0:
        return Pinched(residual=0.0, commutator_residual=0.0, consistent=True)

    residual = frobenius_norm(pinch(a, b).matrix - b.matrix) / b_norm
    a_norm = operator_norm(a.op)
    commutator = a.op.matrix @ b.matrix - b.matrix @ a.op.matrix
    commutator_residual = 0.0 if a_norm == 0.0 else frobenius_norm(commutator) / (2.0 * a_norm * b_norm)

    pinched = residual <= tol
    commuting = commutator_residual <= (tol if commutator_tol is None else commutator_tol)
    consistent = pinched == commuting
    if not consistent:
        logger.warning(
            "pinching and commutator tests disagree: residual=%.3e commutator=%.3e",
            residual, commutator_residual,
        )
    cls = Pinched if pinched else NotPinched
    return cls(residual=residual, commutator_residual=commutator_residual, consistent=consistent)
