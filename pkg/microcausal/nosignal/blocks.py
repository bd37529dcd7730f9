"""
Microcausal Block Decomposition

A unitary U on H1 (x) H2 written as U = sum_{k,l} B_kl (x) |k><l| with
B_kl = (I (x) <k|) U (I (x) |l>) acting on H1. The dilation criterion works
on the pairwise products B_k'l'^dag B_kl: U is local in the sense of the
measurement condition iff every such product is a multiple of the identity.

Blocks are partial matrix elements; no operator basis of L(H1) is ever
built.
"""

import logging
from dataclasses import dataclass

import numpy as np

from microcausal.core.operator import BipartiteDims, Operator, require_unitary

logger = logging.getLogger(__name__)

BlockIndex = tuple[int, int, int, int]


@dataclass(frozen=True)
class BlockDecomposition:
    """blocks[k, l] is the d1 x d1 block B_kl; array shape (d2, d2, d1, d1)."""

    dims: BipartiteDims
    blocks: np.ndarray

    def block(self, k: int, l: int) -> Operator:
        return Operator(self.blocks[k, l])

    def reassemble(self) -> Operator:
        """sum_{k,l} B_kl (x) |k><l|."""
        d1, d2 = self.dims.d1, self.dims.d2
        return Operator(np.einsum("klij->ikjl", self.blocks).reshape(d1 * d2, d1 * d2))


@dataclass(frozen=True)
class LambdaTensor:
    """
    values[k, k', l, l'] = tr(B_k'l'^dag B_kl) / d1
    residuals[k, k', l, l'] = ||B_k'l'^dag B_kl - values * I||_F
    """

    dims: BipartiteDims
    values: np.ndarray
    residuals: np.ndarray

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max())

    @property
    def witness(self) -> BlockIndex:
        """Index tuple of the largest residual (first in C order on ties)."""
        flat = int(np.argmax(self.residuals))
        return tuple(int(i) for i in np.unravel_index(flat, self.residuals.shape))  # type: ignore[return-value]

    def diagonal(self) -> np.ndarray:
        """lambda_{k k l l} as a (d2, d2) array; real and >= 0 up to rounding."""
        return np.einsum("kkll->kl", self.values)


def block_decompose(u: Operator, dims: BipartiteDims) -> BlockDecomposition:
    """
    Split u into its d2 x d2 grid of H1 blocks.

    Raises:
        DimensionMismatch: If u.dim != d1*d2.
        NotUnitary: If u is not unitary within 1e-9.
    """
    dims.require(u)
    require_unitary(u)
    u4 = u.matrix.reshape(dims.d1, dims.d2, dims.d1, dims.d2)
    blocks = np.ascontiguousarray(u4.transpose(1, 3, 0, 2))
    blocks.setflags(write=False)
    return BlockDecomposition(dims=dims, blocks=blocks)


def lambda_tensor(bd: BlockDecomposition) -> LambdaTensor:
    d1 = bd.dims.d1
    b = bd.blocks
    # products[k, k', l, l', i, j] = (B_k'l'^dag B_kl)[i, j]
    products = np.einsum("mnri,klrj->kmlnij", b.conj(), b)
    values = np.einsum("kmlnii->kmln", products) / d1
    defect = products - values[..., np.newaxis, np.newaxis] * np.eye(d1)
    residuals = np.sqrt(np.einsum("kmlnij,kmlnij->kmln", defect, defect.conj()).real)
    logger.debug("lambda tensor: dims=(%d, %d) max residual=%.3e", d1, bd.dims.d2, residuals.max())
    return LambdaTensor(dims=bd.dims, values=values, residuals=residuals)
