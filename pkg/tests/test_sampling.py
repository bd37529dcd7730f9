import numpy as np

from microcausal.core.operator import BipartiteDims, Side, is_unitary, partial_trace
from microcausal.quantum.sampling import (
    as_generator,
    haar_isometry,
    random_density,
    random_product_density,
    random_product_unitary,
    random_unitary,
    substream,
)


def test_substreams_are_independent_and_reproducible():
    a = substream(7, 0).random(4)
    b = substream(7, 1).random(4)
    assert not np.allclose(a, b)
    np.testing.assert_array_equal(a, substream(7, 0).random(4))


def test_integer_seed_is_substream_zero():
    np.testing.assert_array_equal(as_generator(3).random(3), substream(3, 0).random(3))


def test_random_unitary_is_seeded_and_unitary():
    u = random_unitary(4, 12)
    assert is_unitary(u)
    np.testing.assert_array_equal(u.matrix, random_unitary(4, 12).matrix)
    assert not np.allclose(u.matrix, random_unitary(4, 13).matrix)


def test_haar_isometry_columns_are_orthonormal():
    v = haar_isometry(6, 3, substream(0, 0))
    np.testing.assert_allclose(v.conj().T @ v, np.eye(3), atol=1e-12)


def test_random_density_has_full_rank():
    rho = random_density(4, 2)
    assert np.linalg.eigvalsh(rho.matrix).min() > 0.0


def test_random_product_density_is_a_product():
    dims = BipartiteDims(2, 3)
    rho = random_product_density(dims, 5)
    rho1 = partial_trace(rho.op, dims, Side.SECOND).matrix
    rho2 = partial_trace(rho.op, dims, Side.FIRST).matrix
    np.testing.assert_allclose(rho.matrix, np.kron(rho1, rho2), atol=1e-14)


def test_random_product_unitary():
    assert is_unitary(random_product_unitary(BipartiteDims(3, 2), 1))


def test_random_unitaries_are_unitary_in_every_dimension():
    for dim in range(2, 33):
        u = random_unitary(dim, dim)
        assert u.dim == dim
        assert is_unitary(u)
