"""
Microcausal Spectral Decomposition

Hermitian eigendecomposition with degeneracy clustering: eigenvalues
closer than a tolerance share one spectral projector, so every projector
sum below runs over the spectrum of the observable rather than over
individual floating-point eigenvalues.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from microcausal.core.operator import (
    Operator,
    frobenius_norm,
    operator_norm,
    require_hermitian,
)

logger = logging.getLogger(__name__)

DEGENERACY_REL_TOL = 1e-8


@dataclass(frozen=True)
class SpectralCluster:
    """One eigenvalue of the observable and its spectral projector."""

    eigenvalue: float
    projector: Operator

    @property
    def rank(self) -> int:
        return int(round(self.projector.trace().real))


@dataclass(frozen=True)
class SpectralDecomposition:
    """
    Clusters sorted by ascending eigenvalue.

    Invariants (checked by `defects`): projectors are Hermitian and
    idempotent, mutually orthogonal, sum to the identity, and
    sum(lambda * P) reconstructs the source operator.
    """

    clusters: tuple[SpectralCluster, ...]
    source_dim: int

    def __len__(self) -> int:
        return len(self.clusters)

    @property
    def eigenvalues(self) -> tuple[float, ...]:
        return tuple(c.eigenvalue for c in self.clusters)

    @property
    def projectors(self) -> tuple[Operator, ...]:
        return tuple(c.projector for c in self.clusters)

    def reconstruct(self) -> Operator:
        total = np.zeros((self.source_dim, self.source_dim), dtype=np.complex128)
        for cluster in self.clusters:
            total += cluster.eigenvalue * cluster.projector.matrix
        return Operator(total)

    def defects(self) -> dict[str, float]:
        """Worst-case violation of each projector invariant."""
        eye = np.eye(self.source_dim)
        idempotence = 0.0
        orthogonality = 0.0
        completeness = np.zeros_like(eye, dtype=np.complex128)
        for a, ca in enumerate(self.clusters):
            p = ca.projector.matrix
            idempotence = max(idempotence, frobenius_norm(p @ p - p))
            completeness += p
            for cb in self.clusters[a + 1:]:
                orthogonality = max(orthogonality, frobenius_norm(p @ cb.projector.matrix))
        return {
            "idempotence": idempotence,
            "orthogonality": orthogonality,
            "completeness": frobenius_norm(completeness - eye),
        }


def hermitian_spectral(a: Operator, degeneracy_tol: Optional[float] = None) -> SpectralDecomposition:
    """
    Spectral decomposition of a Hermitian operator.

    Args:
        a: Hermitian operator (relative defect <= 1e-10).
        degeneracy_tol: Eigenvalues whose consecutive gap is <= this value are
            merged into one cluster. Defaults to 1e-8 * ||a||_op.

    Returns:
        SpectralDecomposition with clusters in ascending eigenvalue order.

    Raises:
        NotHermitian: If the precondition fails.
    """
    require_hermitian(a)
    if degeneracy_tol is None:
        degeneracy_tol = DEGENERACY_REL_TOL * operator_norm(a)

    # eigh reads one triangle only; symmetrize so both halves contribute.
    h = 0.5 * (a.matrix + a.matrix.conj().T)
    values, vectors = np.linalg.eigh(h)

    groups: list[list[int]] = [[0]]
    for index in range(1, len(values)):
        if values[index] - values[index - 1] <= degeneracy_tol:
            groups[-1].append(index)
        else:
            groups.append([index])

    clusters = []
    for group in groups:
        basis = vectors[:, group]
        clusters.append(
            SpectralCluster(
                eigenvalue=float(np.mean(values[group])),
                projector=Operator(basis @ basis.conj().T),
            )
        )
    logger.debug("spectral decomposition: dim=%d clusters=%d", a.dim, len(clusters))
    return SpectralDecomposition(clusters=tuple(clusters), source_dim=a.dim)
