"""
Microcausal Random Ensembles

Seeded Ginibre/Haar sampling. Every random draw comes from a PCG64
generator on a named substream: substream i of seed s is
SeedSequence(s, spawn_key=(i,)). Parallel loops give each sample index its
own substream, so results never depend on the number of worker threads.
"""

from typing import Union

import numpy as np

from microcausal.core.operator import BipartiteDims, Operator, tensor_product
from microcausal.quantum.states import DensityMatrix, Observable

SeedLike = Union[int, np.random.Generator]


def substream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for sample `index` of run `seed`."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def as_generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return substream(int(seed), 0)


def ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Independent standard complex Gaussians, E|g|^2 = 1."""
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def haar_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """
    Haar-distributed isometry (rows >= cols) from QR of a Ginibre matrix.

    Each column is divided by the phase of the corresponding diagonal entry
    of R, which makes the distribution exactly Haar and the output
    independent of the LAPACK sign convention.
    """
    q, r = np.linalg.qr(ginibre(rows, cols, rng))
    diag = np.diagonal(r)
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    return q * phases[np.newaxis, :]


def random_unitary(dim: int, seed: SeedLike) -> Operator:
    rng = as_generator(seed)
    return Operator(haar_isometry(dim, dim, rng))


def random_density(dim: int, seed: SeedLike) -> DensityMatrix:
    """Normalized G G^dag (Hilbert-Schmidt measure)."""
    rng = as_generator(seed)
    g = ginibre(dim, dim, rng)
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(Operator(rho / np.trace(rho).real))


def random_hermitian(dim: int, seed: SeedLike) -> Observable:
    rng = as_generator(seed)
    g = ginibre(dim, dim, rng)
    return Observable.from_operator(Operator(0.5 * (g + g.conj().T)))


def random_product_density(dims: BipartiteDims, seed: SeedLike) -> DensityMatrix:
    """rho1 (x) rho2 with both factors drawn from the same generator."""
    rng = as_generator(seed)
    rho1 = random_density(dims.d1, rng)
    rho2 = random_density(dims.d2, rng)
    return DensityMatrix(tensor_product(rho1.op, rho2.op))


def random_product_unitary(dims: BipartiteDims, seed: SeedLike) -> Operator:
    rng = as_generator(seed)
    return tensor_product(random_unitary(dims.d1, rng), random_unitary(dims.d2, rng))
