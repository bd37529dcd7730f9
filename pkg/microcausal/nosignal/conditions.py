"""
Microcausal No-Signalling Conditions

Checkers for the two locality conditions on a joint unitary U:

- measurement condition: a nonselective projective measurement on H1
  before U leaves Bob's marginal tr_1(U rho U^dag) unchanged, for all
  states and observables;
- channel condition: the same for every CPTP map acting on H1 only.

The analytic checker (dilation criterion on the block products) is the
authoritative verdict. The sampled checkers evaluate the conditions
directly on random or supplied inputs and can only find violations.

Sample i always draws from substream i of the run seed, so verdicts do
not depend on the number of worker threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Sequence, TypeVar, Union

import numpy as np

from microcausal.core.operator import (
    BipartiteDims,
    Operator,
    Side,
    frobenius_norm,
    partial_trace,
    require_unitary,
)
from microcausal.errors import DimensionMismatch
from microcausal.nosignal.blocks import BlockIndex, block_decompose, lambda_tensor
from microcausal.quantum.channels import (
    apply_channel,
    lift_to_first,
    projector_channel,
    random_channel,
)
from microcausal.quantum.sampling import (
    random_density,
    random_hermitian,
    random_product_density,
    substream,
)
from microcausal.quantum.states import DensityMatrix, KrausChannel, Observable

logger = logging.getLogger(__name__)

ANALYTIC_TOL = 1e-8
SAMPLED_TOL = 1e-7

T = TypeVar("T")


# =============================================================================
# VERDICTS
# =============================================================================


@dataclass(frozen=True)
class BlockWitness:
    indices: BlockIndex


@dataclass(frozen=True)
class MeasurementWitness:
    sample_index: int
    state: DensityMatrix
    observable: Observable


@dataclass(frozen=True)
class ChannelWitness:
    pair_index: int
    state: DensityMatrix
    channel: KrausChannel


Witness = Union[BlockWitness, MeasurementWitness, ChannelWitness]


@dataclass(frozen=True)
class Holds:
    """No violation: max_deviation over all evaluations is within tolerance."""

    max_deviation: float
    evaluations: int

    @property
    def holds(self) -> bool:
        return True


@dataclass(frozen=True)
class Violated:
    deviation: float
    witness: Witness
    evaluations: int

    @property
    def holds(self) -> bool:
        return False


Verdict = Union[Holds, Violated]


# =============================================================================
# BOB MARGINALS
# =============================================================================


def bob_marginal(u: Operator, dims: BipartiteDims, rho: DensityMatrix) -> np.ndarray:
    """tr_1(U rho U^dag) as a d2 x d2 array."""
    evolved = Operator(u.matrix @ rho.matrix @ u.matrix.conj().T)
    return partial_trace(evolved, dims, Side.FIRST).matrix


def channel_deviation(u: Operator, dims: BipartiteDims, psi: KrausChannel, rho: DensityMatrix) -> float:
    """||tr_1(U (Psi (x) id)(rho) U^dag) - tr_1(U rho U^dag)||_F."""
    acted = apply_channel(lift_to_first(psi, dims), rho)
    return frobenius_norm(bob_marginal(u, dims, acted) - bob_marginal(u, dims, rho))


def measurement_deviation(u: Operator, dims: BipartiteDims, obs: Observable, rho: DensityMatrix) -> float:
    """Channel deviation for the Lüders channel of an H1 observable."""
    if obs.dim != dims.d1:
        raise DimensionMismatch(f"observable dim {obs.dim} does not match first factor {dims.d1}")
    return channel_deviation(u, dims, projector_channel(obs), rho)


def bob_outcome_deviation(
    u: Operator,
    dims: BipartiteDims,
    rho: DensityMatrix,
    alice: KrausChannel,
    bob: Observable,
) -> float:
    """
    Largest change in any of Bob's outcome probabilities caused by Alice.

    max_y |tr(sigma' P_y) - tr(sigma P_y)| with sigma, sigma' Bob's marginals
    without and with Alice's operation, P_y Bob's spectral projectors.
    """
    if bob.dim != dims.d2:
        raise DimensionMismatch(f"Bob observable dim {bob.dim} does not match second factor {dims.d2}")
    acted = apply_channel(lift_to_first(alice, dims), rho)
    before = DensityMatrix(Operator(bob_marginal(u, dims, rho)))
    after = DensityMatrix(Operator(bob_marginal(u, dims, acted)))
    return float(np.max(np.abs(after.probabilities(bob.spectral) - before.probabilities(bob.spectral))))


# =============================================================================
# CHECKERS
# =============================================================================


def check_mc_analytic(u: Operator, dims: BipartiteDims, tol: float = ANALYTIC_TOL) -> Verdict:
    """
    Holds iff every B_k'l'^dag B_kl is a multiple of the identity, i.e. the
    largest lambda-tensor residual is <= tol * ||u||_F.
    """
    lt = lambda_tensor(block_decompose(u, dims))
    evaluations = lt.residuals.size
    if lt.max_residual > tol * frobenius_norm(u):
        return Violated(deviation=lt.max_residual, witness=BlockWitness(lt.witness), evaluations=evaluations)
    return Holds(max_deviation=lt.max_residual, evaluations=evaluations)


def _run_indexed(task: Callable[[int], T], count: int, threads: int) -> list[T]:
    if threads <= 1 or count <= 1:
        return [task(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(task, range(count)))


def _aggregate(deviations: Sequence[float], tol: float, witness_for: Callable[[int], Witness]) -> Verdict:
    worst = int(np.argmax(deviations)) if len(deviations) else 0
    max_dev = float(deviations[worst]) if len(deviations) else 0.0
    if max_dev > tol:
        return Violated(deviation=max_dev, witness=witness_for(worst), evaluations=len(deviations))
    return Holds(max_deviation=max_dev, evaluations=len(deviations))


def _random_state(dims: BipartiteDims, rng: np.random.Generator, product_states: bool) -> DensityMatrix:
    if product_states:
        return random_product_density(dims, rng)
    return random_density(dims.total, rng)


def check_mc_sampled(
    u: Operator,
    dims: BipartiteDims,
    n_samples: int = 100,
    seed: int = 0,
    tol: float = SAMPLED_TOL,
    product_states: bool = False,
    threads: int = 1,
) -> Verdict:
    """
    Evaluate the measurement condition on n_samples random (rho, A) pairs.

    Sample i draws rho on H1 (x) H2 (a product state when product_states is
    set, which suffices by linearity) and a Hermitian A on H1 from
    substream i. Violated carries the worst sample.
    """
    dims.require(u)
    require_unitary(u)
    if n_samples < 1:
        raise ValueError(f"n_samples must be at least 1, got {n_samples}")

    def draw(index: int) -> tuple[DensityMatrix, Observable]:
        rng = substream(seed, index)
        return _random_state(dims, rng, product_states), random_hermitian(dims.d1, rng)

    def evaluate(index: int) -> float:
        rho, obs = draw(index)
        deviation = measurement_deviation(u, dims, obs, rho)
        logger.debug("mc sample %d: deviation=%.3e", index, deviation)
        return deviation

    deviations = _run_indexed(evaluate, n_samples, threads)

    def witness_for(index: int) -> Witness:
        rho, obs = draw(index)
        return MeasurementWitness(sample_index=index, state=rho, observable=obs)

    return _aggregate(deviations, tol, witness_for)


def check_c_sampled(
    u: Operator,
    dims: BipartiteDims,
    channels: Sequence[KrausChannel] = (),
    states: Sequence[DensityMatrix] = (),
    n_samples: int = 100,
    seed: int = 0,
    tol: float = SAMPLED_TOL,
    kraus_rank: Optional[int] = None,
    product_states: bool = False,
    threads: int = 1,
) -> Verdict:
    """
    Evaluate the channel condition on (Psi, rho) pairs.

    With both lists empty, n_samples random pairs are drawn, pair i from
    substream i. Otherwise every supplied channel meets every supplied
    state, an empty list being replaced by n_samples random draws. The
    verdict covers the whole list: a single passing pair proves nothing.
    """
    dims.require(u)
    require_unitary(u)
    for psi in channels:
        if psi.dim != dims.d1:
            raise DimensionMismatch(f"channel acts on dim {psi.dim}, first factor has dim {dims.d1}")
    for rho in states:
        if rho.dim != dims.total:
            raise DimensionMismatch(f"state dim {rho.dim} does not match {dims.total}")
    if (not channels or not states) and n_samples < 1:
        raise ValueError(f"n_samples must be at least 1, got {n_samples}")
    rank = kraus_rank or dims.d1

    def random_pair(index: int) -> tuple[KrausChannel, DensityMatrix]:
        rng = substream(seed, index)
        return random_channel(dims.d1, rank, rng), _random_state(dims, rng, product_states)

    if not channels and not states:
        pair_at: Callable[[int], tuple[KrausChannel, DensityMatrix]] = random_pair
        count = n_samples
    else:
        channel_list = list(channels) or [random_pair(i)[0] for i in range(n_samples)]
        state_list = list(states) or [random_pair(i)[1] for i in range(n_samples)]
        pairs = list(product(channel_list, state_list))
        pair_at = pairs.__getitem__
        count = len(pairs)

    def evaluate(index: int) -> float:
        psi, rho = pair_at(index)
        deviation = channel_deviation(u, dims, psi, rho)
        logger.debug("c pair %d: deviation=%.3e", index, deviation)
        return deviation

    deviations = _run_indexed(evaluate, count, threads)

    def witness_for(index: int) -> Witness:
        psi, rho = pair_at(index)
        return ChannelWitness(pair_index=index, state=rho, channel=psi)

    return _aggregate(deviations, tol, witness_for)
