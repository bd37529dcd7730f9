"""
Microcausal Operator Core

Dense complex-matrix foundation shared by every other layer: the Operator
value type, bipartite dimension bookkeeping, tensor products, partial
traces, brackets and norms.

Composite index convention (global, fixed): for a bipartite space
H1 (x) H2 with dimensions (d1, d2), basis state |i>|k> has index i*d2 + k.
np.kron follows the same convention, so every bipartite routine here is
written against it.

@provenance microcausal_core_v1
@layer kernel
"""

from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from microcausal.errors import DimensionMismatch, NotHermitian, NotUnitary

# Absolute tolerance for quantities that are exactly zero in exact arithmetic.
ZERO_TOL = 1e-12
UNITARY_TOL = 1e-9
HERMITIAN_TOL = 1e-10


class Side(str, Enum):
    """Which tensor factor a bipartite operation acts on."""

    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class BipartiteDims:
    """Dimensions (d1, d2) of H1 and H2."""

    d1: int
    d2: int

    def __post_init__(self) -> None:
        if self.d1 < 1 or self.d2 < 1:
            raise DimensionMismatch(f"bipartite dims must be positive, got ({self.d1}, {self.d2})")

    @property
    def total(self) -> int:
        return self.d1 * self.d2

    def swapped(self) -> "BipartiteDims":
        return BipartiteDims(self.d2, self.d1)

    def require(self, op: "Operator") -> None:
        """Raise DimensionMismatch unless op lives on H1 (x) H2."""
        if op.dim != self.total:
            raise DimensionMismatch(
                f"operator of dim {op.dim} does not match dims ({self.d1}, {self.d2})"
            )


@dataclass(frozen=True, eq=False)
class Operator:
    """
    Dense square complex matrix with dimension metadata.

    The wrapped array is copied to complex128 and made read-only, so an
    Operator can be shared freely between threads.
    """

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatch(f"operator must be a square matrix, got shape {matrix.shape}")
        if matrix.shape[0] < 1:
            raise DimensionMismatch("operator dimension must be at least 1")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, dim: int, label: str = "") -> "Operator":
        return cls(np.eye(dim, dtype=np.complex128), label=label or f"I{dim}")

    @classmethod
    def zeros(cls, dim: int) -> "Operator":
        return cls(np.zeros((dim, dim), dtype=np.complex128))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def with_label(self, label: str) -> "Operator":
        return Operator(self.matrix, label=label)

    def __matmul__(self, other: "Operator") -> "Operator":
        _require_same_dim(self, other)
        return Operator(self.matrix @ other.matrix)

    def __add__(self, other: "Operator") -> "Operator":
        _require_same_dim(self, other)
        return Operator(self.matrix + other.matrix)

    def __sub__(self, other: "Operator") -> "Operator":
        _require_same_dim(self, other)
        return Operator(self.matrix - other.matrix)

    def __neg__(self) -> "Operator":
        return Operator(-self.matrix)

    def __mul__(self, scalar: complex) -> "Operator":
        return Operator(self.matrix * scalar)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"Operator(dim={self.dim}{name})"


OperatorLike = Union[Operator, np.ndarray]


def as_operator(value: OperatorLike) -> Operator:
    return value if isinstance(value, Operator) else Operator(value)


def _require_same_dim(a: Operator, b: Operator) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")


# =============================================================================
# PRODUCTS AND PARTIAL TRACES
# =============================================================================


def tensor_product(a: Operator, b: Operator) -> Operator:
    """
    a (x) b with entry[(i*db + k), (j*db + l)] = a[i, j] * b[k, l].
    """
    label = f"{a.label}(x){b.label}" if a.label and b.label else ""
    return Operator(np.kron(a.matrix, b.matrix), label=label)


def partial_trace(rho: Operator, dims: BipartiteDims, over: Union[Side, str]) -> Operator:
    """
    Trace out one tensor factor.

    Args:
        rho: Operator on H1 (x) H2.
        dims: Factor dimensions.
        over: Side.FIRST returns a d2 x d2 operator (H1 traced out);
            Side.SECOND returns a d1 x d1 operator.

    Returns:
        The reduced operator.
    """
    dims.require(rho)
    side = Side(over)
    blocks = rho.matrix.reshape(dims.d1, dims.d2, dims.d1, dims.d2)
    if side is Side.FIRST:
        return Operator(np.einsum("ikil->kl", blocks))
    return Operator(np.einsum("ikjk->ij", blocks))


# =============================================================================
# BRACKETS AND NORMS
# =============================================================================


def dagger(a: Operator) -> Operator:
    return Operator(a.matrix.conj().T, label=f"{a.label}^dag" if a.label else "")


def frobenius_norm(a: OperatorLike) -> float:
    matrix = a.matrix if isinstance(a, Operator) else np.asarray(a)
    return float(np.linalg.norm(matrix))


def operator_norm(a: OperatorLike) -> float:
    """Largest singular value."""
    matrix = a.matrix if isinstance(a, Operator) else np.asarray(a)
    if matrix.size == 0:
        return 0.0
    return float(np.linalg.norm(matrix, 2))


def commutator(a: Operator, b: Operator) -> Operator:
    _require_same_dim(a, b)
    return Operator(a.matrix @ b.matrix - b.matrix @ a.matrix)


def anticommutator(a: Operator, b: Operator) -> Operator:
    _require_same_dim(a, b)
    return Operator(a.matrix @ b.matrix + b.matrix @ a.matrix)


# =============================================================================
# PROPERTY CHECKS
# =============================================================================


def hermiticity_defect(a: Operator) -> float:
    """||a - a^dag||_F relative to ||a||_F (0 for the zero operator)."""
    scale = frobenius_norm(a)
    if scale == 0.0:
        return 0.0
    return frobenius_norm(a.matrix - a.matrix.conj().T) / scale


def require_hermitian(a: Operator, tol: float = HERMITIAN_TOL) -> None:
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitian(f"operator is not Hermitian: relative defect {defect:.3e} > {tol:.1e}")


def unitarity_defect(u: Operator) -> float:
    """||u^dag u - I||_F."""
    return frobenius_norm(u.matrix.conj().T @ u.matrix - np.eye(u.dim))


def is_unitary(u: Operator, tol: float = UNITARY_TOL) -> bool:
    return unitarity_defect(u) <= tol * max(1.0, np.sqrt(u.dim))


def require_unitary(u: Operator, tol: float = UNITARY_TOL) -> None:
    if not is_unitary(u, tol):
        raise NotUnitary(
            f"operator is not unitary: ||U^dag U - I||_F = {unitarity_defect(u):.3e}"
        )
