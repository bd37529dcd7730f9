"""
Microcausal Signalling Protocol

Alice and Bob share a bipartite state. At t = 0 Alice either does nothing
(bit 0) or performs a nonselective measurement of her observable (bit 1);
the joint unitary then acts and Bob measures his observable. Bob's outcome
space is the set of spectral clusters of his observable, in ascending
eigenvalue order.

The exact marginals come from dense propagation. The Monte Carlo layer
draws `shots` outcomes per branch by inverse-CDF sampling of those exact
distributions: branch b uses substream b of the run seed.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from microcausal.core.operator import BipartiteDims, Operator, require_unitary
from microcausal.errors import DimensionMismatch
from microcausal.nosignal.conditions import bob_marginal
from microcausal.protocol.schemas import BOUND_DESCRIPTION, ShotsBound, SignalReport
from microcausal.quantum.channels import apply_channel, lift_to_first, projector_channel
from microcausal.quantum.sampling import substream
from microcausal.quantum.states import DensityMatrix, Observable

logger = logging.getLogger(__name__)

SIGNAL_TOL = 1e-10
DEFAULT_ERROR_TARGETS: tuple[tuple[float, float], ...] = ((1e-10, 0.05), (1e-10, 0.01))


@dataclass(frozen=True)
class ProtocolSpec:
    dims: BipartiteDims
    initial_state: DensityMatrix
    alice_observable: Observable
    joint_unitary: Operator
    bob_observable: Observable
    shots: int = 10_000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.initial_state.dim != self.dims.total:
            raise DimensionMismatch(f"initial state dim {self.initial_state.dim} does not match {self.dims.total}")
        if self.alice_observable.dim != self.dims.d1:
            raise DimensionMismatch(f"Alice observable dim {self.alice_observable.dim} does not match {self.dims.d1}")
        if self.bob_observable.dim != self.dims.d2:
            raise DimensionMismatch(f"Bob observable dim {self.bob_observable.dim} does not match {self.dims.d2}")
        self.dims.require(self.joint_unitary)
        require_unitary(self.joint_unitary)
        if self.shots < 1:
            raise ValueError(f"shots must be positive, got {self.shots}")


def _normalized(probabilities: np.ndarray) -> np.ndarray:
    p = np.clip(probabilities, 0.0, None)
    return p / p.sum()


def bob_marginal_distributions(spec: ProtocolSpec) -> tuple[np.ndarray, np.ndarray]:
    """
    Bob's exact outcome distributions for Alice's bit 0 and bit 1.

    p0 is read from tr_1(U rho U^dag); p1 from tr_1(U M(rho) U^dag) with M
    Alice's Lüders channel lifted to H1 (x) H2.
    """
    u, dims = spec.joint_unitary, spec.dims
    measured = apply_channel(lift_to_first(projector_channel(spec.alice_observable), dims), spec.initial_state)
    spectral = spec.bob_observable.spectral
    p0 = DensityMatrix(Operator(bob_marginal(u, dims, spec.initial_state))).probabilities(spectral)
    p1 = DensityMatrix(Operator(bob_marginal(u, dims, measured))).probabilities(spectral)
    return _normalized(p0), _normalized(p1)


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.sum(np.abs(np.asarray(p) - np.asarray(q))))


def shots_for_error(tv: float, epsilon: float, delta: float) -> Optional[int]:
    """
    Shots per branch for Bob to read Alice's bit with error probability <= delta.

    Bob counts the event {y : p0(y) > p1(y)}, whose frequency differs by tv
    between the branches; Hoeffding gives shots >= 2 ln(2/delta) / tv^2.
    Returns None ("unbounded") when tv <= epsilon.
    """
    if tv <= epsilon:
        return None
    return int(math.ceil(2.0 * math.log(2.0 / delta) / tv**2))


def sample_counts(distribution: np.ndarray, shots: int, rng: np.random.Generator) -> np.ndarray:
    """Outcome counts from inverse-CDF sampling."""
    cdf = np.cumsum(distribution)
    cdf[-1] = 1.0
    outcomes = np.searchsorted(cdf, rng.random(shots), side="right")
    return np.bincount(np.minimum(outcomes, len(distribution) - 1), minlength=len(distribution))


def coarse_grain(distribution: Sequence[float], partition: Sequence[Sequence[int]]) -> np.ndarray:
    """Merge outcome indices group by group; every index must appear exactly once."""
    p = np.asarray(distribution, dtype=float)
    flat = sorted(i for group in partition for i in group)
    if flat != list(range(len(p))):
        raise ValueError("partition must cover every outcome index exactly once")
    return np.array([p[list(group)].sum() for group in partition])


def simulate_protocol(
    spec: ProtocolSpec,
    error_targets: Sequence[tuple[float, float]] = DEFAULT_ERROR_TARGETS,
    tol: float = SIGNAL_TOL,
    threads: int = 1,
) -> SignalReport:
    """Exact and sampled signalling strength of one protocol instance."""
    p0, p1 = bob_marginal_distributions(spec)
    tv_exact = total_variation(p0, p1)

    def branch(index: int) -> np.ndarray:
        distribution = (p0, p1)[index]
        return sample_counts(distribution, spec.shots, substream(spec.seed, index))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=2) as pool:
            counts0, counts1 = pool.map(branch, (0, 1))
    else:
        counts0, counts1 = branch(0), branch(1)
    tv_empirical = total_variation(counts0 / spec.shots, counts1 / spec.shots)
    logger.debug("protocol: tv_exact=%.6g tv_empirical=%.6g shots=%d", tv_exact, tv_empirical, spec.shots)

    bounds = [
        ShotsBound(
            epsilon=eps,
            delta=delta,
            shots=shots_for_error(tv_exact, eps, delta),
        )
        for eps, delta in error_targets
    ]
    return SignalReport(
        dims=(spec.dims.d1, spec.dims.d2),
        bob_eigenvalues=list(spec.bob_observable.spectral.eigenvalues),
        p0=[float(x) for x in p0],
        p1=[float(x) for x in p1],
        tv_exact=tv_exact,
        tv_empirical=tv_empirical,
        counts0=[int(c) for c in counts0],
        counts1=[int(c) for c in counts1],
        shots=spec.shots,
        seed=spec.seed,
        tolerance=tol,
        signalling=tv_exact > tol,
        shots_for_error=bounds,
        bound=BOUND_DESCRIPTION,
    )
