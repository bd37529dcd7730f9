import numpy as np
import pytest

from microcausal.core.operator import BipartiteDims, Operator
from microcausal.errors import DimensionMismatch, NotUnitary
from microcausal.nosignal.conditions import (
    BlockWitness,
    ChannelWitness,
    Holds,
    MeasurementWitness,
    Violated,
    bob_marginal,
    bob_outcome_deviation,
    check_c_sampled,
    check_mc_analytic,
    check_mc_sampled,
)
from microcausal.nosignal.factorize import factorize_unitary, operator_schmidt_rank
from microcausal.quantum.channels import depolarizing_channel, identity_channel, random_channel
from microcausal.quantum.sampling import random_density, random_product_unitary, random_unitary, substream

QUBITS = BipartiteDims(2, 2)


def test_bob_marginal_of_cnot_on_bell(cnot, bell):
    np.testing.assert_allclose(bob_marginal(cnot, QUBITS, bell), np.diag([1.0, 0.0]), atol=1e-15)


def test_analytic_identity_holds():
    verdict = check_mc_analytic(Operator.identity(6), BipartiteDims(2, 3))
    assert isinstance(verdict, Holds)
    assert verdict.evaluations == 3**4


def test_analytic_cnot_violated(cnot):
    verdict = check_mc_analytic(cnot, QUBITS)
    assert isinstance(verdict, Violated)
    assert verdict.deviation >= 0.5
    assert verdict.witness == BlockWitness((0, 0, 0, 0))


def test_analytic_requires_unitary():
    with pytest.raises(NotUnitary):
        check_mc_analytic(Operator(np.diag([1, 1, 1, 0.5])), QUBITS)


def test_sampled_cnot_violated_with_witness(cnot):
    verdict = check_mc_sampled(cnot, QUBITS, n_samples=20, seed=3)
    assert isinstance(verdict, Violated)
    assert isinstance(verdict.witness, MeasurementWitness)
    assert verdict.evaluations == 20


def test_sampled_needs_samples(cnot):
    with pytest.raises(ValueError, match="n_samples"):
        check_mc_sampled(cnot, QUBITS, n_samples=0)
    with pytest.raises(ValueError, match="n_samples"):
        check_c_sampled(cnot, QUBITS, n_samples=0)


def test_sampled_verdicts_do_not_depend_on_threads():
    u = random_unitary(6, 1)
    dims = BipartiteDims(3, 2)
    single = check_mc_sampled(u, dims, n_samples=16, seed=9, threads=1)
    pooled = check_mc_sampled(u, dims, n_samples=16, seed=9, threads=4)
    assert single.deviation == pooled.deviation
    assert single.witness.sample_index == pooled.witness.sample_index


def test_product_states_suffice_to_find_violations(cnot):
    assert not check_mc_sampled(cnot, QUBITS, n_samples=20, product_states=True).holds
    assert not check_c_sampled(cnot, QUBITS, n_samples=20, product_states=True).holds


def test_channel_condition_with_supplied_inputs(cnot, bell):
    verdict = check_c_sampled(cnot, QUBITS, channels=[depolarizing_channel()], states=[bell])
    assert isinstance(verdict, Violated)
    assert verdict.deviation == pytest.approx(1 / np.sqrt(2))
    assert isinstance(verdict.witness, ChannelWitness)
    assert verdict.witness.pair_index == 0


def test_channel_condition_pairs_every_channel_with_every_state():
    u = random_product_unitary(QUBITS, 2)
    channels = [identity_channel(2), depolarizing_channel()]
    states = [random_density(4, s) for s in range(3)]
    verdict = check_c_sampled(u, QUBITS, channels=channels, states=states)
    assert isinstance(verdict, Holds)
    assert verdict.evaluations == 6


def test_channel_condition_fills_missing_list_with_random_draws():
    u = random_product_unitary(QUBITS, 2)
    verdict = check_c_sampled(u, QUBITS, channels=[depolarizing_channel()], n_samples=7)
    assert verdict.evaluations == 7


def test_channel_condition_checks_channel_dims(cnot):
    with pytest.raises(DimensionMismatch):
        check_c_sampled(cnot, QUBITS, channels=[identity_channel(3)])


def test_bob_outcome_deviation(cnot, bell, sigma_z):
    assert bob_outcome_deviation(cnot, QUBITS, bell, depolarizing_channel(), sigma_z) == pytest.approx(0.5)
    local = random_product_unitary(QUBITS, 3)
    assert bob_outcome_deviation(local, QUBITS, bell, random_channel(2, 2, 1), sigma_z) < 1e-12


@pytest.mark.parametrize("d1, d2", [(2, 2), (2, 3), (3, 3), (4, 4)])
def test_five_verdicts_agree(d1, d2):
    dims = BipartiteDims(d1, d2)
    for index in range(50):
        rng = substream(d1 * 10 + d2, index)
        u = random_product_unitary(dims, rng) if index % 2 == 0 else random_unitary(dims.total, rng)
        verdicts = {
            "mc-analytic": check_mc_analytic(u, dims).holds,
            "mc-sampled": check_mc_sampled(u, dims, n_samples=100, seed=index).holds,
            "c-sampled": check_c_sampled(u, dims, n_samples=100, seed=index).holds,
            "factorize": factorize_unitary(u, dims).is_product,
            "schmidt": operator_schmidt_rank(u, dims)[0] == 1,
        }
        assert len(set(verdicts.values())) == 1, verdicts
        assert verdicts["factorize"] == (index % 2 == 0)
