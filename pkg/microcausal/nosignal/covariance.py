"""
Microcausal Covariance Reordering

Under factorized dynamics, inserting an operation on H1 at an intermediate
time does not change Bob's final marginal: evolving rho from t0 to t2
directly, or to t1, acting with Psi (x) id, then on to t2, gives the same
tr_1. This is the channel condition applied to U_{t1,t2}, so it fails for
non-factorized joint Hamiltonians.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.linalg import expm

from microcausal.core.operator import (
    BipartiteDims,
    Operator,
    frobenius_norm,
    tensor_product,
)
from microcausal.errors import DimensionMismatch
from microcausal.nosignal.conditions import bob_marginal
from microcausal.quantum.channels import apply_channel, lift_to_first
from microcausal.quantum.states import DensityMatrix, KrausChannel, Observable

logger = logging.getLogger(__name__)

COVARIANCE_TOL = 1e-10
COMPOSITION_TOL = 1e-9


@dataclass(frozen=True)
class Consistent:
    deviation: float
    composition_residual: float


@dataclass(frozen=True)
class Inconsistent:
    deviation: float
    composition_residual: float


CovarianceVerdict = Union[Consistent, Inconsistent]


def _evolution(hamiltonian: np.ndarray, duration: float) -> np.ndarray:
    return expm(-1j * hamiltonian * duration)


def check_covariance_reordering(
    h1: Observable,
    h2: Observable,
    psi: KrausChannel,
    rho: DensityMatrix,
    t0: float,
    t1: float,
    t2: float,
    tol: float = COVARIANCE_TOL,
    joint_hamiltonian: Optional[Operator] = None,
) -> CovarianceVerdict:
    """
    Compare tr_1(U02 rho U02^dag) with tr_1(U12 (Psi (x) id)(U01 rho U01^dag) U12^dag).

    Dynamics are U_ab = exp(-i h1 (b-a)) (x) exp(-i h2 (b-a)), or
    exp(-i H (b-a)) when joint_hamiltonian is given. The verdict is
    Consistent only when the marginals agree within tol and the composition
    identity U02 = U12 U01 holds within COMPOSITION_TOL.

    Raises:
        DimensionMismatch: On inconsistent dims.
        ValueError: Unless t0 <= t1 <= t2.
    """
    if not t0 <= t1 <= t2:
        raise ValueError(f"times must satisfy t0 <= t1 <= t2, got ({t0}, {t1}, {t2})")
    dims = BipartiteDims(h1.dim, h2.dim)
    if psi.dim != dims.d1:
        raise DimensionMismatch(f"channel acts on dim {psi.dim}, first factor has dim {dims.d1}")
    if rho.dim != dims.total:
        raise DimensionMismatch(f"state dim {rho.dim} does not match {dims.total}")

    if joint_hamiltonian is None:
        def evolve(a: float, b: float) -> np.ndarray:
            return np.kron(_evolution(h1.op.matrix, b - a), _evolution(h2.op.matrix, b - a))
    else:
        dims.require(joint_hamiltonian)

        def evolve(a: float, b: float) -> np.ndarray:
            return _evolution(joint_hamiltonian.matrix, b - a)

    u01, u12, u02 = evolve(t0, t1), evolve(t1, t2), evolve(t0, t2)
    composition = frobenius_norm(u02 - u12 @ u01)

    direct = bob_marginal(Operator(u02), dims, rho)
    midway = DensityMatrix(Operator(u01 @ rho.matrix @ u01.conj().T))
    acted = apply_channel(lift_to_first(psi, dims), midway)
    reordered = bob_marginal(Operator(u12), dims, acted)

    deviation = frobenius_norm(direct - reordered)
    logger.debug("covariance reordering: deviation=%.3e composition=%.3e", deviation, composition)
    if composition > COMPOSITION_TOL:
        logger.warning("composition identity residual %.3e exceeds %.1e", composition, COMPOSITION_TOL)
        return Inconsistent(deviation=deviation, composition_residual=composition)
    if deviation <= tol:
        return Consistent(deviation=deviation, composition_residual=composition)
    return Inconsistent(deviation=deviation, composition_residual=composition)


def factorized_generator(h1: Observable, h2: Observable) -> Operator:
    """h1 (x) I + I (x) h2, the joint Hamiltonian of factorized dynamics."""
    return tensor_product(h1.op, Operator.identity(h2.dim)) + tensor_product(Operator.identity(h1.dim), h2.op)
