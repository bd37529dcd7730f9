"""
Microcausal Factorization

Constructive tensor factorization of bipartite unitaries, the operator
Schmidt rank as an independent product test, and party exchange.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from microcausal.core.operator import (
    BipartiteDims,
    Operator,
    frobenius_norm,
    is_unitary,
    tensor_product,
)
from microcausal.errors import InternalInconsistency
from microcausal.nosignal.blocks import BlockIndex, block_decompose, lambda_tensor
from microcausal.quantum.gates import swap_operator

logger = logging.getLogger(__name__)

ANALYTIC_TOL = 1e-8
RECONSTRUCTION_TOL = 1e-8


@dataclass(frozen=True)
class Product:
    """u = e^{i phase} u1 (x) u2."""

    u1: Operator
    u2: Operator
    phase: float
    reconstruction_error: float


@dataclass(frozen=True)
class NotProduct:
    witness: BlockIndex
    residual: float


@dataclass(frozen=True)
class FactorizationResult:
    dims: BipartiteDims
    verdict: Union[Product, NotProduct]
    tolerance: float

    @property
    def is_product(self) -> bool:
        return isinstance(self.verdict, Product)


def factorize_unitary(u: Operator, dims: BipartiteDims, tol: float = ANALYTIC_TOL) -> FactorizationResult:
    """
    Factor u as u1 (x) u2 when the dilation criterion holds.

    The pivot (k0, l0) maximizes |lambda_{k k l l}|. With lambda0 at the
    pivot, u1 = B_{k0 l0} / sqrt(lambda0) is unitary and
    u2[k, l] = tr(u1^dag B_kl) / d1. The largest-magnitude entry of u1 is
    then made real positive; the compensating phase goes into u2.

    Args:
        u: Unitary on H1 (x) H2.
        dims: Factor dimensions.
        tol: Relative tolerance of the dilation criterion.

    Returns:
        FactorizationResult with a Product or NotProduct verdict.

    Raises:
        NotUnitary: If u is not unitary.
        InternalInconsistency: If the criterion holds but the factors fail
            to reconstruct u.
    """
    bd = block_decompose(u, dims)
    lt = lambda_tensor(bd)
    threshold = tol * frobenius_norm(u)
    if lt.max_residual > threshold:
        logger.debug("not a product: witness=%s residual=%.3e", lt.witness, lt.max_residual)
        return FactorizationResult(
            dims=dims,
            verdict=NotProduct(witness=lt.witness, residual=lt.max_residual),
            tolerance=tol,
        )

    diagonal = lt.diagonal()
    k0, l0 = np.unravel_index(int(np.argmax(np.abs(diagonal))), diagonal.shape)
    lambda0 = float(diagonal[k0, l0].real)
    logger.debug("pivot (k0, l0)=(%d, %d) lambda0=%.6g", k0, l0, lambda0)

    u1 = bd.blocks[k0, l0] / np.sqrt(lambda0)
    u2 = np.einsum("ij,klij->kl", u1.conj(), bd.blocks) / dims.d1

    anchor = np.unravel_index(int(np.argmax(np.abs(u1))), u1.shape)
    theta = np.angle(u1[anchor])
    u1 = u1 * np.exp(-1j * theta)
    u2 = u2 * np.exp(1j * theta)

    product = np.kron(u1, u2)
    phase = float(np.angle(np.vdot(product, u.matrix)))
    factor1, factor2 = Operator(u1, label="u1"), Operator(u2, label="u2")
    error = frobenius_norm(u.matrix - np.exp(1j * phase) * product)

    bound = RECONSTRUCTION_TOL * np.sqrt(dims.total)
    if error > bound or not (is_unitary(factor1) and is_unitary(factor2)):
        raise InternalInconsistency(
            f"dilation criterion holds but reconstruction error is {error:.3e} (bound {bound:.1e})"
        )
    return FactorizationResult(
        dims=dims,
        verdict=Product(u1=factor1, u2=factor2, phase=phase, reconstruction_error=error),
        tolerance=tol,
    )


def operator_schmidt_rank(
    u: Operator, dims: BipartiteDims, tol: float = ANALYTIC_TOL
) -> tuple[int, list[float]]:
    """
    Operator-Schmidt rank and singular values (descending).

    The reshuffled matrix M[(i, i'), (k, l)] = u[(i, k), (i', l)] has rank 1
    exactly when u is a tensor product.
    """
    dims.require(u)
    d1, d2 = dims.d1, dims.d2
    reshuffled = u.matrix.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3).reshape(d1 * d1, d2 * d2)
    singular = np.linalg.svd(reshuffled, compute_uv=False)
    if singular[0] == 0.0:
        return 0, [float(s) for s in singular]
    rank = int(np.sum(singular > tol * singular[0]))
    return rank, [float(s) for s in singular]


def swap_parties(u: Operator, dims: BipartiteDims) -> tuple[Operator, BipartiteDims]:
    """
    The same evolution with the two parties exchanged: S u S^dag on H2 (x) H1.
    """
    dims.require(u)
    s = swap_operator(dims).matrix
    return Operator(s @ u.matrix @ s.conj().T), dims.swapped()


def reconstruct(result: FactorizationResult) -> Optional[Operator]:
    """e^{i phase} u1 (x) u2 for a Product verdict, None otherwise."""
    if not isinstance(result.verdict, Product):
        return None
    v = result.verdict
    return tensor_product(v.u1, v.u2) * np.exp(1j * v.phase)
