"""
Microcausal Quantum Objects

Density matrices, observables, Kraus channels, Lüders measurement and
seeded random ensembles.
"""

from microcausal.quantum.channels import (
    apply_channel,
    depolarizing_channel,
    identity_channel,
    lift_to_first,
    lift_to_second,
    nonselective_measurement,
    projector_channel,
    random_channel,
)
from microcausal.quantum.gates import (
    CNOT,
    HADAMARD,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    bell_state,
    library_operator,
    library_state,
    swap_operator,
)
from microcausal.quantum.sampling import (
    random_density,
    random_hermitian,
    random_product_density,
    random_unitary,
    substream,
)
from microcausal.quantum.states import DensityMatrix, KrausChannel, Observable

__all__ = [
    "apply_channel",
    "depolarizing_channel",
    "identity_channel",
    "lift_to_first",
    "lift_to_second",
    "nonselective_measurement",
    "projector_channel",
    "random_channel",
    "CNOT",
    "HADAMARD",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "bell_state",
    "library_operator",
    "library_state",
    "swap_operator",
    "random_density",
    "random_hermitian",
    "random_product_density",
    "random_unitary",
    "substream",
    "DensityMatrix",
    "KrausChannel",
    "Observable",
]
