"""
Microcausal Gate and State Library

Named operators and states, addressable from protocol files by name
(case-insensitive): "pauli_x", "cnot", "bell_phi_plus", ...
"""

from typing import Callable

import numpy as np

from microcausal.core.operator import BipartiteDims, Operator
from microcausal.errors import InputFormatError
from microcausal.quantum.states import DensityMatrix

_SQRT_HALF = 1.0 / np.sqrt(2.0)

PAULI_X = Operator(np.array([[0, 1], [1, 0]]), label="X")
PAULI_Y = Operator(np.array([[0, -1j], [1j, 0]]), label="Y")
PAULI_Z = Operator(np.array([[1, 0], [0, -1]]), label="Z")
HADAMARD = Operator(_SQRT_HALF * np.array([[1, 1], [1, -1]]), label="H")
# Control in the first factor, target in the second.
CNOT = Operator(
    np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    label="CNOT",
)


def swap_operator(dims: BipartiteDims) -> Operator:
    """
    Permutation H1 (x) H2 -> H2 (x) H1 sending |i>|k> to |k>|i>.

    The result maps index i*d2 + k to k*d1 + i; it is square only as a
    d1*d2 matrix, so it acts between spaces with swapped dims.
    """
    total = dims.total
    perm = np.zeros((total, total))
    for i in range(dims.d1):
        for k in range(dims.d2):
            perm[k * dims.d1 + i, i * dims.d2 + k] = 1.0
    return Operator(perm, label="SWAP")


SWAP = swap_operator(BipartiteDims(2, 2))


def bell_state(name: str = "phi_plus") -> DensityMatrix:
    vectors = {
        "phi_plus": [1, 0, 0, 1],
        "phi_minus": [1, 0, 0, -1],
        "psi_plus": [0, 1, 1, 0],
        "psi_minus": [0, 1, -1, 0],
    }
    try:
        return DensityMatrix.pure(vectors[name])
    except KeyError:
        raise InputFormatError(f"unknown Bell state {name!r}") from None


def plus_state(n_qubits: int = 1) -> DensityMatrix:
    """|+>^(x n)."""
    v = np.ones(2**n_qubits)
    return DensityMatrix.pure(v)


def basis_state(dim: int, index: int) -> DensityMatrix:
    v = np.zeros(dim)
    v[index] = 1.0
    return DensityMatrix.pure(v)


OPERATOR_LIBRARY: dict[str, Callable[[], Operator]] = {
    "identity2": lambda: Operator.identity(2),
    "identity4": lambda: Operator.identity(4),
    "pauli_x": lambda: PAULI_X,
    "pauli_y": lambda: PAULI_Y,
    "pauli_z": lambda: PAULI_Z,
    "hadamard": lambda: HADAMARD,
    "cnot": lambda: CNOT,
    "swap": lambda: SWAP,
}

STATE_LIBRARY: dict[str, Callable[[], DensityMatrix]] = {
    "bell_phi_plus": lambda: bell_state("phi_plus"),
    "bell_phi_minus": lambda: bell_state("phi_minus"),
    "bell_psi_plus": lambda: bell_state("psi_plus"),
    "bell_psi_minus": lambda: bell_state("psi_minus"),
    "plus": lambda: plus_state(1),
    "plus_plus": lambda: plus_state(2),
    "zero": lambda: basis_state(2, 0),
    "zero_zero": lambda: basis_state(4, 0),
}


def library_operator(name: str) -> Operator:
    try:
        return OPERATOR_LIBRARY[name.lower()]()
    except KeyError:
        raise InputFormatError(
            f"unknown operator {name!r}; known: {', '.join(sorted(OPERATOR_LIBRARY))}"
        ) from None


def library_state(name: str) -> DensityMatrix:
    try:
        return STATE_LIBRARY[name.lower()]()
    except KeyError:
        raise InputFormatError(
            f"unknown state {name!r}; known: {', '.join(sorted(STATE_LIBRARY))}"
        ) from None
