import numpy as np
import pytest

from microcausal.core.operator import BipartiteDims, Operator
from microcausal.errors import DimensionMismatch, NotUnitary
from microcausal.nosignal.blocks import block_decompose, lambda_tensor
from microcausal.quantum.sampling import random_product_unitary, random_unitary


@pytest.mark.parametrize("d1, d2", [(2, 2), (2, 3), (3, 2), (4, 4)])
def test_blocks_reassemble(d1, d2):
    dims = BipartiteDims(d1, d2)
    u = random_unitary(d1 * d2, d1 + 10 * d2)
    bd = block_decompose(u, dims)
    assert bd.blocks.shape == (d2, d2, d1, d1)
    np.testing.assert_allclose(bd.reassemble().matrix, u.matrix, atol=1e-14)


def test_block_is_partial_matrix_element():
    dims = BipartiteDims(2, 3)
    u = random_unitary(6, 0)
    bd = block_decompose(u, dims)
    k, l = 2, 1
    expected = u.matrix[k::3, l::3]
    np.testing.assert_allclose(bd.block(k, l).matrix, expected)


def test_product_unitary_has_vanishing_residuals():
    dims = BipartiteDims(3, 2)
    lt = lambda_tensor(block_decompose(random_product_unitary(dims, 4), dims))
    assert lt.max_residual < 1e-12


def test_cnot_residual_and_witness(cnot):
    lt = lambda_tensor(block_decompose(cnot, BipartiteDims(2, 2)))
    assert lt.max_residual == pytest.approx(1 / np.sqrt(2))
    assert lt.witness == (0, 0, 0, 0)


def test_lambda_diagonal_sums_to_second_dimension():
    dims = BipartiteDims(2, 3)
    lt = lambda_tensor(block_decompose(random_unitary(6, 8), dims))
    assert lt.diagonal().sum().real == pytest.approx(3.0)


def test_block_decompose_preconditions():
    with pytest.raises(NotUnitary):
        block_decompose(Operator(np.diag([1, 1, 1, 2])), BipartiteDims(2, 2))
    with pytest.raises(DimensionMismatch):
        block_decompose(Operator.identity(6), BipartiteDims(2, 2))
