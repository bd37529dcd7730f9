import numpy as np
import pytest

from microcausal.core.operator import BipartiteDims, is_unitary, tensor_product
from microcausal.errors import InputFormatError
from microcausal.quantum.gates import (
    CNOT,
    HADAMARD,
    OPERATOR_LIBRARY,
    STATE_LIBRARY,
    bell_state,
    library_operator,
    library_state,
    swap_operator,
)
from microcausal.quantum.sampling import random_unitary


def test_cnot_controls_on_first_factor():
    ket_10 = np.array([0, 0, 1, 0])
    np.testing.assert_array_equal(CNOT.matrix @ ket_10, [0, 0, 0, 1])


def test_swap_exchanges_factors():
    dims = BipartiteDims(2, 3)
    a, b = random_unitary(2, 0), random_unitary(3, 1)
    s = swap_operator(dims).matrix
    swapped = s @ tensor_product(a, b).matrix @ s.T
    np.testing.assert_allclose(swapped, tensor_product(b, a).matrix, atol=1e-14)


@pytest.mark.parametrize("name", sorted(OPERATOR_LIBRARY))
def test_library_operators_are_unitary(name):
    assert is_unitary(library_operator(name))


@pytest.mark.parametrize("name", sorted(STATE_LIBRARY))
def test_library_states_are_valid(name):
    assert library_state(name).op.trace() == pytest.approx(1.0)


def test_library_lookup_is_case_insensitive():
    np.testing.assert_array_equal(library_operator("CNOT").matrix, CNOT.matrix)
    np.testing.assert_allclose(library_operator("Hadamard").matrix, HADAMARD.matrix)


def test_unknown_names():
    with pytest.raises(InputFormatError, match="unknown operator"):
        library_operator("toffoli")
    with pytest.raises(InputFormatError, match="unknown state"):
        library_state("ghz")
    with pytest.raises(InputFormatError, match="unknown Bell state"):
        bell_state("phi_zero")
