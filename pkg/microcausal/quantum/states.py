"""
Microcausal Quantum States

Density matrices, observables and Kraus channels. Each type validates its
invariants on construction and raises a MicrocausalError subclass when
they fail, so any instance in circulation is physically valid.
"""

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from microcausal.core.operator import (
    HERMITIAN_TOL,
    Operator,
    frobenius_norm,
    hermiticity_defect,
    require_hermitian,
)
from microcausal.core.spectral import SpectralDecomposition, hermitian_spectral
from microcausal.errors import DimensionMismatch, InvalidState, NotTracePreserving

TRACE_TOL = 1e-10
POSITIVITY_TOL = -1e-10
KRAUS_TOL = 1e-9


@dataclass(frozen=True)
class DensityMatrix:
    """Positive semidefinite, unit-trace operator."""

    op: Operator

    def __post_init__(self) -> None:
        defect = hermiticity_defect(self.op)
        if defect > HERMITIAN_TOL:
            raise InvalidState(f"density matrix not Hermitian: relative defect {defect:.3e}")
        trace = self.op.trace()
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidState(f"density matrix trace is {trace.real:.12g}, expected 1")
        smallest = float(np.linalg.eigvalsh(self.op.matrix)[0])
        if smallest < POSITIVITY_TOL:
            raise InvalidState(f"density matrix has negative eigenvalue {smallest:.3e}")

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, normalize: bool = False) -> "DensityMatrix":
        matrix = np.asarray(matrix, dtype=np.complex128)
        if normalize:
            matrix = matrix / np.trace(matrix)
        return cls(Operator(matrix))

    @classmethod
    def pure(cls, vector: Iterable[complex]) -> "DensityMatrix":
        """|v><v| / <v|v>."""
        v = np.asarray(list(vector), dtype=np.complex128)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise InvalidState("cannot build a pure state from the zero vector")
        v = v / norm
        return cls(Operator(np.outer(v, v.conj())))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(Operator(np.eye(dim) / dim))

    @property
    def dim(self) -> int:
        return self.op.dim

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix

    def probabilities(self, spectral: SpectralDecomposition) -> np.ndarray:
        """Born-rule probabilities tr(rho P) per spectral cluster."""
        if spectral.source_dim != self.dim:
            raise DimensionMismatch(f"state dim {self.dim} vs observable dim {spectral.source_dim}")
        return np.array(
            [np.einsum("ij,ji->", self.matrix, p.matrix).real for p in spectral.projectors]
        )


@dataclass(frozen=True)
class Observable:
    """Hermitian operator together with its clustered spectral decomposition."""

    op: Operator
    spectral: SpectralDecomposition

    @classmethod
    def from_operator(cls, op: Operator, degeneracy_tol: Optional[float] = None) -> "Observable":
        require_hermitian(op)
        return cls(op=op, spectral=hermitian_spectral(op, degeneracy_tol))

    @property
    def dim(self) -> int:
        return self.op.dim


@dataclass(frozen=True)
class KrausChannel:
    """CPTP map rho -> sum K rho K^dag given by a nonempty Kraus list."""

    kraus: tuple[Operator, ...]
    label: str = field(default="")

    def __post_init__(self) -> None:
        kraus = tuple(self.kraus)
        if not kraus:
            raise NotTracePreserving("Kraus list is empty")
        dim = kraus[0].dim
        for k in kraus:
            if k.dim != dim:
                raise DimensionMismatch(f"Kraus operators of unequal dims: {dim} vs {k.dim}")
        total = sum(k.matrix.conj().T @ k.matrix for k in kraus)
        defect = frobenius_norm(total - np.eye(dim))
        if defect > KRAUS_TOL:
            raise NotTracePreserving(f"||sum K^dag K - I||_F = {defect:.3e}")
        object.__setattr__(self, "kraus", kraus)

    @property
    def dim(self) -> int:
        return self.kraus[0].dim

    def __len__(self) -> int:
        return len(self.kraus)
