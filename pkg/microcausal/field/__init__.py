"""
Microcausal Field Layer

Mode-sum two-point functions, truncated Fock-space field operators,
the pinching criterion and the spin-statistics bracket table at work.
"""

from microcausal.field.fock import DEFAULT_BUDGET, FockSpace, count_states
from microcausal.field.model import (
    FieldModel,
    IntervalType,
    SpacetimePoint,
    c_number_bracket,
    classify_interval,
    continuum_delta_plus,
    default_c_number_grid,
    bracket_partial_sums,
    delta_plus,
    refinement_envelopes,
    spacelike_grid,
)
from microcausal.field.operators import (
    ScalarField,
    build_field_operator,
    c_number_scan,
    operator_bracket_scan,
    operator_refinement,
)
from microcausal.field.pinching import NotPinched, Pinched, pinch, pinching_check
from microcausal.field.schemas import BracketRow, BracketScan, FermionDemoReport
from microcausal.field.spinor import (
    SpinorModel,
    bracket_refinement,
    dirac_mode_model,
    fermion_measurability_demo,
    spinor_bracket,
)

__all__ = [
    "DEFAULT_BUDGET",
    "FockSpace",
    "count_states",
    "FieldModel",
    "IntervalType",
    "SpacetimePoint",
    "c_number_bracket",
    "classify_interval",
    "continuum_delta_plus",
    "default_c_number_grid",
    "bracket_partial_sums",
    "delta_plus",
    "refinement_envelopes",
    "spacelike_grid",
    "ScalarField",
    "build_field_operator",
    "c_number_scan",
    "operator_bracket_scan",
    "operator_refinement",
    "NotPinched",
    "Pinched",
    "pinch",
    "pinching_check",
    "BracketRow",
    "BracketScan",
    "FermionDemoReport",
    "SpinorModel",
    "bracket_refinement",
    "dirac_mode_model",
    "fermion_measurability_demo",
    "spinor_bracket",
]
