"""
Microcausal Core

Operator foundation, spectral decomposition and static tables.
"""

from microcausal.core.canon import (
    BRACKET_TABLE,
    EXIT_CODE_TABLE,
    BracketCase,
    ExitCode,
    FieldClass,
    Statistics,
    get_bracket_case,
)
from microcausal.core.operator import (
    BipartiteDims,
    Operator,
    Side,
    anticommutator,
    commutator,
    dagger,
    frobenius_norm,
    is_unitary,
    operator_norm,
    partial_trace,
    tensor_product,
)
from microcausal.core.schemas import OperatorFile, dump_operator, load_operator, parse_operator
from microcausal.core.spectral import SpectralCluster, SpectralDecomposition, hermitian_spectral

__all__ = [
    "BRACKET_TABLE",
    "EXIT_CODE_TABLE",
    "BracketCase",
    "ExitCode",
    "FieldClass",
    "Statistics",
    "get_bracket_case",
    "BipartiteDims",
    "Operator",
    "Side",
    "anticommutator",
    "commutator",
    "dagger",
    "frobenius_norm",
    "is_unitary",
    "operator_norm",
    "partial_trace",
    "tensor_product",
    "OperatorFile",
    "dump_operator",
    "load_operator",
    "parse_operator",
    "SpectralCluster",
    "SpectralDecomposition",
    "hermitian_spectral",
]
