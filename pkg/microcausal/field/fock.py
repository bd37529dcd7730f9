"""
Microcausal Truncated Fock Space

Occupation-number basis over a finite set of modes with two truncations:
every mode holds at most `occupation_cutoff` quanta (1 for fermions) and
the total occupation is at most `particle_cap` (None disables the cap and
recovers the full product space).

Basis states are ordered lexicographically with mode 0 most significant.
Fermionic ladder operators carry the Jordan-Wigner sign
(-1)^(sum_{i<j} n_i), so distinct-mode anticommutators vanish exactly.

A product of q ladder operators is reproduced exactly by the truncated
matrices on input states whose intermediate states all stay in the basis;
`restricted_indices(depth)` selects those states for depth = q - 1.
"""

import logging
from itertools import product
from typing import Iterator, Optional

import numpy as np

from microcausal.core.canon import Statistics
from microcausal.errors import BudgetExceeded

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 4096


def count_states(n_modes: int, occupation_cutoff: int, particle_cap: Optional[int]) -> int:
    """Basis size, computed without enumerating the basis."""
    if particle_cap is None:
        return (occupation_cutoff + 1) ** n_modes
    # ways[t] = number of occupation vectors over the modes seen so far with total t
    ways = np.zeros(particle_cap + 1, dtype=object)
    ways[0] = 1
    for _ in range(n_modes):
        nxt = np.zeros_like(ways)
        for n in range(min(occupation_cutoff, particle_cap) + 1):
            nxt[n:] += ways[: particle_cap + 1 - n]
        ways = nxt
    return int(sum(ways))


def _enumerate(n_modes: int, occupation_cutoff: int, particle_cap: Optional[int]) -> Iterator[tuple[int, ...]]:
    if particle_cap is None:
        yield from product(range(occupation_cutoff + 1), repeat=n_modes)
        return

    def walk(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n_modes:
            yield prefix
            return
        for n in range(min(occupation_cutoff, remaining) + 1):
            yield from walk(prefix + (n,), remaining - n)

    yield from walk((), particle_cap)


class FockSpace:
    """
    Truncated multi-mode Fock space with dense ladder matrices.

    Ladder matrices are real and built once in the constructor, so a
    FockSpace is safe to share between threads afterwards.
    """

    def __init__(
        self,
        n_modes: int,
        statistics: Statistics,
        occupation_cutoff: int = 2,
        particle_cap: Optional[int] = 3,
        budget: int = DEFAULT_BUDGET,
    ) -> None:
        if n_modes < 1:
            raise ValueError(f"n_modes must be positive, got {n_modes}")
        self.n_modes = n_modes
        self.statistics = Statistics(statistics)
        self.occupation_cutoff = 1 if self.statistics is Statistics.FERMI else occupation_cutoff
        self.particle_cap = particle_cap

        dim = count_states(n_modes, self.occupation_cutoff, particle_cap)
        if dim > budget:
            raise BudgetExceeded(
                dim,
                budget,
                f"{n_modes} modes, occupation cutoff {self.occupation_cutoff}, particle cap {particle_cap}",
            )

        self.basis = np.array(list(_enumerate(n_modes, self.occupation_cutoff, particle_cap)), dtype=np.int64)
        self.basis.setflags(write=False)
        radix = self.occupation_cutoff + 1
        self._weights = radix ** np.arange(n_modes - 1, -1, -1, dtype=np.int64)
        self._keys = self.basis @ self._weights
        self._annihilators = tuple(self._build_annihilator(j) for j in range(n_modes))
        logger.debug(
            "fock space: modes=%d statistics=%s dim=%d", n_modes, self.statistics.value, self.dim
        )

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def totals(self) -> np.ndarray:
        return self.basis.sum(axis=1)

    def index_of(self, occupation: tuple[int, ...]) -> int:
        key = int(np.dot(occupation, self._weights))
        index = int(np.searchsorted(self._keys, key))
        if index >= self.dim or self._keys[index] != key:
            raise KeyError(f"occupation {occupation} is not in the truncated basis")
        return index

    def _build_annihilator(self, j: int) -> np.ndarray:
        matrix = np.zeros((self.dim, self.dim))
        sources = np.nonzero(self.basis[:, j] > 0)[0]
        targets = np.searchsorted(self._keys, self._keys[sources] - self._weights[j])
        occupations = self.basis[sources, j]
        if self.statistics is Statistics.BOSE:
            amplitudes = np.sqrt(occupations.astype(float))
        else:
            parity = self.basis[sources, :j].sum(axis=1) % 2
            amplitudes = np.where(parity == 0, 1.0, -1.0)
        matrix[targets, sources] = amplitudes
        matrix.setflags(write=False)
        return matrix

    def annihilator(self, j: int) -> np.ndarray:
        return self._annihilators[j]

    def creator(self, j: int) -> np.ndarray:
        return self._annihilators[j].T

    def number_operator(self) -> np.ndarray:
        return np.diag(self.totals.astype(float))

    def vacuum_index(self) -> int:
        return 0

    def restricted_indices(self, depth: int, per_mode_raises: Optional[int] = None) -> np.ndarray:
        """
        Basis states on which a chain of depth + 1 ladder operators is exact.

        Selects total <= particle_cap - depth and, for bosons, every mode
        <= occupation_cutoff - per_mode_raises (default: depth), the largest
        number of times one mode can be raised before the last operator.
        """
        mask = np.ones(self.dim, dtype=bool)
        if self.particle_cap is not None:
            mask &= self.totals <= self.particle_cap - depth
        if self.statistics is Statistics.BOSE:
            raises = depth if per_mode_raises is None else per_mode_raises
            mask &= (self.basis <= self.occupation_cutoff - raises).all(axis=1)
        return np.nonzero(mask)[0]

    def restricted_norm(
        self, matrix: np.ndarray, depth: int, per_mode_raises: Optional[int] = None
    ) -> Optional[float]:
        """
        Operator norm of matrix restricted to the exact input subspace.

        Returns None (and logs a warning) when that subspace is empty.
        """
        columns = self.restricted_indices(depth, per_mode_raises)
        if columns.size == 0:
            logger.warning(
                "restricted subspace is empty: depth=%d cap=%s cutoff=%d",
                depth, self.particle_cap, self.occupation_cutoff,
            )
            return None
        return float(np.linalg.norm(matrix[:, columns], 2))
