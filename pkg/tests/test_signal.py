from dataclasses import replace

import numpy as np
import pytest

from microcausal.core.operator import BipartiteDims, Operator
from microcausal.core.schemas import OperatorFile
from microcausal.errors import DimensionMismatch, InputFormatError, NotUnitary
from microcausal.protocol.schemas import ProtocolFile, SignalReport
from microcausal.protocol.signal import (
    ProtocolSpec,
    bob_marginal_distributions,
    coarse_grain,
    sample_counts,
    shots_for_error,
    simulate_protocol,
    total_variation,
)
from microcausal.quantum.gates import bell_state
from microcausal.quantum.sampling import random_density, random_hermitian, random_product_unitary, substream
from microcausal.quantum.states import Observable

QUBITS = BipartiteDims(2, 2)


@pytest.fixture
def cnot_protocol(cnot, bell, sigma_x, sigma_z):
    return ProtocolSpec(
        dims=QUBITS,
        initial_state=bell,
        alice_observable=sigma_x,
        joint_unitary=cnot,
        bob_observable=sigma_z,
        shots=10_000,
        seed=0,
    )


def test_cnot_bell_distributions(cnot_protocol):
    p0, p1 = bob_marginal_distributions(cnot_protocol)
    np.testing.assert_allclose(p0, [0.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(p1, [0.5, 0.5], atol=1e-12)
    assert total_variation(p0, p1) == pytest.approx(0.5)


def test_cnot_bell_report(cnot_protocol):
    report = simulate_protocol(cnot_protocol)
    assert report.signalling
    assert report.tv_exact == pytest.approx(0.5)
    assert report.counts0 == [0, 10_000]
    assert sum(report.counts1) == 10_000
    assert abs(report.tv_empirical - 0.5) <= 0.02
    assert report.bob_eigenvalues == pytest.approx([-1.0, 1.0])
    assert [b.shots for b in report.shots_for_error] == [30, 43]


def test_shots_for_error():
    assert shots_for_error(0.5, 1e-10, 0.05) == 30
    assert shots_for_error(0.5, 1e-10, 0.01) == 43
    assert shots_for_error(1e-12, 1e-10, 0.05) is None
    assert shots_for_error(0.1, 1e-10, 0.05) > shots_for_error(0.5, 1e-10, 0.05)


@pytest.mark.parametrize("seed", range(4))
def test_product_unitaries_never_signal(seed):
    dims = BipartiteDims(2, 3)
    spec = ProtocolSpec(
        dims=dims,
        initial_state=random_density(6, substream(seed, 0)),
        alice_observable=random_hermitian(2, substream(seed, 1)),
        joint_unitary=random_product_unitary(dims, substream(seed, 2)),
        bob_observable=random_hermitian(3, substream(seed, 3)),
        shots=500,
        seed=seed,
    )
    report = simulate_protocol(spec)
    assert not report.signalling
    assert report.tv_exact < 1e-10
    assert all(bound.unbounded for bound in report.shots_for_error)


def test_sampling_is_seeded_and_thread_independent(cnot_protocol):
    first = simulate_protocol(cnot_protocol)
    again = simulate_protocol(cnot_protocol, threads=2)
    assert first.counts1 == again.counts1
    assert first.tv_empirical == again.tv_empirical


def test_sample_counts_sum_to_shots():
    counts = sample_counts(np.array([0.2, 0.3, 0.5]), 1000, substream(0, 0))
    assert counts.sum() == 1000
    assert len(counts) == 3
    assert sample_counts(np.array([0.0, 1.0]), 50, substream(0, 1)).tolist() == [0, 50]


def test_coarse_grain():
    np.testing.assert_allclose(coarse_grain([0.1, 0.2, 0.3, 0.4], [[0, 3], [1, 2]]), [0.5, 0.5])
    with pytest.raises(ValueError, match="exactly once"):
        coarse_grain([0.5, 0.5], [[0], [0]])


def test_protocol_spec_validation(bell, sigma_x, sigma_z, cnot):
    with pytest.raises(DimensionMismatch):
        ProtocolSpec(QUBITS, random_density(3, 0), sigma_x, cnot, sigma_z)
    with pytest.raises(DimensionMismatch):
        ProtocolSpec(QUBITS, bell, random_hermitian(3, 0), cnot, sigma_z)
    with pytest.raises(NotUnitary):
        ProtocolSpec(QUBITS, bell, sigma_x, Operator(np.diag([1, 1, 1, 2])), sigma_z)
    with pytest.raises(ValueError, match="shots"):
        ProtocolSpec(QUBITS, bell, sigma_x, cnot, sigma_z, shots=0)


def test_protocol_file_library_and_inline_operators():
    inline_z = OperatorFile.from_operator(Operator(np.diag([1.0, -1.0])))
    document = {
        "dims": [2, 2],
        "initial_state": "bell_phi_plus",
        "alice_observable": "pauli_x",
        "joint_unitary": "cnot",
        "bob_observable": inline_z.model_dump(),
        "shots": 200,
    }
    spec = ProtocolFile.model_validate(document).to_spec(seed=5)
    assert spec.shots == 200
    assert spec.seed == 5
    np.testing.assert_allclose(spec.initial_state.matrix, bell_state("phi_plus").matrix)


def test_protocol_file_unknown_library_name():
    document = {
        "dims": [2, 2],
        "initial_state": "bell_phi_plus",
        "alice_observable": "pauli_w",
        "joint_unitary": "cnot",
        "bob_observable": "pauli_z",
    }
    with pytest.raises(InputFormatError, match="unknown operator"):
        ProtocolFile.model_validate(document).to_spec()


def test_distribution_csv(cnot_protocol):
    report = simulate_protocol(cnot_protocol)
    lines = report.distribution_csv().splitlines()
    assert lines[0] == "outcome_index,p0,p1"
    assert len(lines) == 3
    assert SignalReport.model_validate_json(report.model_dump_json()).shots_for_error[0].shots == 30


def test_degenerate_bob_observable_groups_outcomes(cnot, bell, sigma_x):
    bob = Observable.from_operator(Operator.identity(2))
    spec = ProtocolSpec(QUBITS, bell, sigma_x, cnot, bob, shots=10)
    p0, p1 = bob_marginal_distributions(spec)
    assert p0.tolist() == pytest.approx([1.0])
    assert not simulate_protocol(spec).signalling


def test_empirical_distance_converges_like_inverse_root_shots(cnot_protocol):
    mean_errors = []
    for shots in (100, 1_000, 10_000):
        errors = [
            abs(simulate_protocol(replace(cnot_protocol, shots=shots, seed=seed)).tv_empirical - 0.5)
            for seed in range(32)
        ]
        mean_errors.append(float(np.mean(errors)))
        # mean |Binomial(n, 1/2) / n - 1/2| is about 0.4 / sqrt(n)
        assert 0.15 <= mean_errors[-1] * np.sqrt(shots) <= 0.8
    assert mean_errors[0] > mean_errors[1] > mean_errors[2]


@pytest.mark.parametrize("seed", range(20))
def test_coarse_graining_never_increases_total_variation(seed):
    rng = np.random.default_rng(seed)
    p, q = rng.dirichlet(np.ones(6)), rng.dirichlet(np.ones(6))
    labels = rng.integers(0, 3, size=6)
    partition = [np.flatnonzero(labels == block).tolist() for block in range(3)]
    partition = [block for block in partition if block]
    assert total_variation(coarse_grain(p, partition), coarse_grain(q, partition)) <= total_variation(p, q) + 1e-15
