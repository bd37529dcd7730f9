"""
Microcausal Channels

Channel application, lifting to a bipartite space, nonselective (Lüders)
measurement and a small set of channel constructors.
"""

import logging

import numpy as np

from microcausal.core.operator import BipartiteDims, Operator, tensor_product
from microcausal.errors import DimensionMismatch
from microcausal.quantum.gates import PAULI_X, PAULI_Y, PAULI_Z
from microcausal.quantum.sampling import SeedLike, as_generator, haar_isometry
from microcausal.quantum.states import DensityMatrix, KrausChannel, Observable

logger = logging.getLogger(__name__)


def _hermitized(matrix: np.ndarray) -> Operator:
    return Operator(0.5 * (matrix + matrix.conj().T))


def apply_channel(psi: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """sum_j K_j rho K_j^dag."""
    if psi.dim != rho.dim:
        raise DimensionMismatch(f"channel acts on dim {psi.dim}, state has dim {rho.dim}")
    out = np.zeros_like(rho.matrix)
    for k in psi.kraus:
        out += k.matrix @ rho.matrix @ k.matrix.conj().T
    return DensityMatrix(_hermitized(out))


def lift_to_first(psi: KrausChannel, dims: BipartiteDims) -> KrausChannel:
    """Psi (x) id_2: every Kraus operator K becomes K (x) I_{d2}."""
    if psi.dim != dims.d1:
        raise DimensionMismatch(f"channel acts on dim {psi.dim}, first factor has dim {dims.d1}")
    eye = Operator.identity(dims.d2)
    label = f"{psi.label}(x)id" if psi.label else ""
    return KrausChannel(tuple(tensor_product(k, eye) for k in psi.kraus), label=label)


def lift_to_second(psi: KrausChannel, dims: BipartiteDims) -> KrausChannel:
    """id_1 (x) Psi."""
    if psi.dim != dims.d2:
        raise DimensionMismatch(f"channel acts on dim {psi.dim}, second factor has dim {dims.d2}")
    eye = Operator.identity(dims.d1)
    return KrausChannel(tuple(tensor_product(eye, k) for k in psi.kraus))


def projector_channel(obs: Observable) -> KrausChannel:
    """The Lüders channel of obs as a Kraus list {P_x}."""
    return KrausChannel(obs.spectral.projectors, label="luders")


def nonselective_measurement(obs: Observable, rho: DensityMatrix) -> DensityMatrix:
    """sum_x P_x rho P_x over the spectral clusters of obs."""
    if obs.dim != rho.dim:
        raise DimensionMismatch(f"observable dim {obs.dim} vs state dim {rho.dim}")
    out = np.zeros_like(rho.matrix)
    for p in obs.spectral.projectors:
        out += p.matrix @ rho.matrix @ p.matrix
    return DensityMatrix(_hermitized(out))


# =============================================================================
# CONSTRUCTORS
# =============================================================================


def identity_channel(dim: int) -> KrausChannel:
    return KrausChannel((Operator.identity(dim),), label="identity")


def depolarizing_channel() -> KrausChannel:
    """Completely depolarizing qubit channel: every state goes to I/2."""
    paulis = (Operator.identity(2), PAULI_X, PAULI_Y, PAULI_Z)
    return KrausChannel(tuple(0.5 * p for p in paulis), label="depolarizing")


def random_channel(dim: int, n_kraus: int, seed: SeedLike) -> KrausChannel:
    """
    Random CPTP map from a Haar isometry V: C^dim -> C^(dim*n_kraus).

    Kraus operator j is the j-th dim x dim row block of V, so
    sum K^dag K = V^dag V = I.
    """
    if n_kraus < 1:
        raise ValueError("n_kraus must be at least 1")
    rng = as_generator(seed)
    v = haar_isometry(dim * n_kraus, dim, rng)
    kraus = tuple(Operator(v[j * dim:(j + 1) * dim, :]) for j in range(n_kraus))
    logger.debug("random channel: dim=%d kraus=%d", dim, n_kraus)
    return KrausChannel(kraus, label="random")
