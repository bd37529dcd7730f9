"""
Microcausal No-Signalling Layer

Block decomposition and dilation criterion, locality checkers,
constructive factorization and the covariance reordering identity.
"""

from microcausal.nosignal.blocks import BlockDecomposition, LambdaTensor, block_decompose, lambda_tensor
from microcausal.nosignal.conditions import (
    Holds,
    Violated,
    bob_marginal,
    bob_outcome_deviation,
    check_c_sampled,
    check_mc_analytic,
    check_mc_sampled,
)
from microcausal.nosignal.covariance import Consistent, Inconsistent, check_covariance_reordering
from microcausal.nosignal.factorize import (
    FactorizationResult,
    NotProduct,
    Product,
    factorize_unitary,
    operator_schmidt_rank,
    swap_parties,
)
from microcausal.nosignal.schemas import VerdictReport, factorization_report, verdict_report

__all__ = [
    "BlockDecomposition",
    "LambdaTensor",
    "block_decompose",
    "lambda_tensor",
    "Holds",
    "Violated",
    "bob_marginal",
    "bob_outcome_deviation",
    "check_c_sampled",
    "check_mc_analytic",
    "check_mc_sampled",
    "Consistent",
    "Inconsistent",
    "check_covariance_reordering",
    "FactorizationResult",
    "NotProduct",
    "Product",
    "factorize_unitary",
    "operator_schmidt_rank",
    "swap_parties",
    "VerdictReport",
    "factorization_report",
    "verdict_report",
]
