import numpy as np
import pytest

from microcausal.core.operator import BipartiteDims, Operator, is_unitary, tensor_product
from microcausal.nosignal.conditions import check_mc_analytic
from microcausal.nosignal.factorize import (
    NotProduct,
    Product,
    factorize_unitary,
    operator_schmidt_rank,
    reconstruct,
    swap_parties,
)
from microcausal.quantum.gates import SWAP
from microcausal.quantum.sampling import random_product_unitary, random_unitary, substream


FACTOR_DIMS = [2, 3, 4, 8]


@pytest.mark.parametrize("d1", FACTOR_DIMS)
@pytest.mark.parametrize("d2", FACTOR_DIMS)
def test_product_unitaries_factor_and_reconstruct(d1, d2):
    dims = BipartiteDims(d1, d2)
    bound = 1e-8 * np.sqrt(dims.total)
    for index in range(50):
        u = random_product_unitary(dims, substream(d1 * 100 + d2, index))
        result = factorize_unitary(u, dims)
        assert result.is_product
        verdict = result.verdict
        assert verdict.reconstruction_error <= bound
        assert is_unitary(verdict.u1) and is_unitary(verdict.u2)
        assert abs(verdict.phase) < 1e-8
        np.testing.assert_allclose(reconstruct(result).matrix, u.matrix, atol=bound)


def test_identity_factors_as_identities():
    verdict = factorize_unitary(Operator.identity(4), BipartiteDims(2, 2)).verdict
    assert isinstance(verdict, Product)
    np.testing.assert_allclose(verdict.u1.matrix, np.eye(2), atol=1e-14)
    np.testing.assert_allclose(verdict.u2.matrix, np.eye(2), atol=1e-14)


def test_global_phase_is_absorbed():
    dims = BipartiteDims(2, 3)
    u = random_product_unitary(dims, 2) * np.exp(0.7j)
    result = factorize_unitary(u, dims)
    np.testing.assert_allclose(reconstruct(result).matrix, u.matrix, atol=1e-10)


def test_cnot_is_not_a_product(cnot):
    result = factorize_unitary(cnot, BipartiteDims(2, 2))
    assert not result.is_product
    assert isinstance(result.verdict, NotProduct)
    assert result.verdict.witness == (0, 0, 0, 0)
    assert reconstruct(result) is None


def test_operator_schmidt_rank(cnot):
    dims = BipartiteDims(2, 2)
    assert operator_schmidt_rank(cnot, dims)[0] == 2
    assert operator_schmidt_rank(SWAP, dims)[0] == 4
    rank, singular = operator_schmidt_rank(random_product_unitary(dims, 0), dims)
    assert rank == 1
    assert singular == sorted(singular, reverse=True)


def test_swap_parties_exchanges_factors():
    dims = BipartiteDims(2, 3)
    a, b = random_unitary(2, 5), random_unitary(3, 6)
    swapped, swapped_dims = swap_parties(tensor_product(a, b), dims)
    assert swapped_dims == BipartiteDims(3, 2)
    np.testing.assert_allclose(swapped.matrix, tensor_product(b, a).matrix, atol=1e-14)


@pytest.mark.parametrize("seed", range(5))
def test_analytic_verdict_is_symmetric_in_the_parties(seed):
    dims = BipartiteDims(2, 3)
    for u in (random_unitary(6, seed), random_product_unitary(dims, seed)):
        swapped, swapped_dims = swap_parties(u, dims)
        assert check_mc_analytic(u, dims).holds == check_mc_analytic(swapped, swapped_dims).holds
