"""
Microcausal Scalar Field Operators

Truncated-Fock matrix realization of the scalar field

    Phi(t, x) = sum_n (2 L omega_n)^(-1/2) (a_n e^{-i phi_n} + b_n^dag e^{+i phi_n}),
    phi_n = omega_n t - k_n x.

Charged fields use modes 0..M-1 for a and M..2M-1 for b (M = 2 n_max + 1);
Hermitian fields set b = a. Ladder operators follow the model statistics.

All operator identities are read on the restricted input subspace of the
Fock space (see FockSpace.restricted_indices): depth 1 for brackets,
depth 3 for commutators of bilinears.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from microcausal.core.canon import FieldClass, Statistics
from microcausal.core.operator import Operator
from microcausal.errors import UnsupportedFieldClass
from microcausal.field.fock import DEFAULT_BUDGET, FockSpace
from microcausal.field.model import (
    FieldModel,
    IntervalType,
    SpacetimePoint,
    c_number_bracket,
    classify_interval,
    continuum_delta_plus,
    delta_plus,
    refinement_envelopes,
)
from microcausal.field.schemas import BracketRow, BracketScan

logger = logging.getLogger(__name__)

BRACKET_DEPTH = 1
BILINEAR_DEPTH = 3


def fock_space_for(model: FieldModel, budget: int = DEFAULT_BUDGET) -> FockSpace:
    multiplicity = 1 if model.hermitian else 2
    return FockSpace(
        n_modes=multiplicity * model.n_field_modes,
        statistics=model.statistics,
        occupation_cutoff=model.occupation_cutoff,
        particle_cap=model.particle_cap,
        budget=budget,
    )


def bracket(x: np.ndarray, y: np.ndarray, statistics: Statistics) -> np.ndarray:
    """Statistics-matched bracket: xy - yx (Bose) or xy + yx (Fermi)."""
    return x @ y + statistics.bracket_sign * (y @ x)


class ScalarField:
    """
    Field operators of one model on one Fock space.

    Raises:
        UnsupportedFieldClass: For DiracLike models (see SpinorModel).
        BudgetExceeded: If the Fock space is larger than the budget.
    """

    def __init__(self, model: FieldModel, budget: int = DEFAULT_BUDGET) -> None:
        if model.field_class is not FieldClass.SCALAR_LIKE:
            raise UnsupportedFieldClass(
                "operator-level scalar field requires field_class=scalar; use the spinor model for dirac"
            )
        self.model = model
        self.fock = fock_space_for(model, budget)
        m = model.n_field_modes
        self._a = [self.fock.annihilator(j) for j in range(m)]
        self._b = self._a if model.hermitian else [self.fock.annihilator(m + j) for j in range(m)]
        self._scale = 1.0 / np.sqrt(2.0 * model.box_length * model.energies)

    def field(self, point: SpacetimePoint) -> np.ndarray:
        phases = np.exp(-1j * (self.model.energies * point.t - self.model.momenta * point.x))
        out = np.zeros((self.fock.dim, self.fock.dim), dtype=np.complex128)
        for n in range(self.model.n_field_modes):
            out += self._scale[n] * (phases[n] * self._a[n] + np.conj(phases[n]) * self._b[n].T)
        return out

    def field_operator(self, point: SpacetimePoint) -> Operator:
        return Operator(self.field(point), label=f"Phi({point.t:g},{point.x:g})")

    @property
    def bilinear_raises(self) -> int:
        """Largest number of raises of one mode in a depth-3 chain of Phi and Phi^dag."""
        return BILINEAR_DEPTH if self.model.hermitian else math.ceil(BILINEAR_DEPTH / 2)

    def bracket_norms(self, x: SpacetimePoint, y: SpacetimePoint) -> tuple[Optional[float], Optional[float]]:
        """
        (||[Phi(x), Phi^dag(y)]_+-||, ||[Phi(x), Phi^dag(y)]_+- - c I||), restricted.
        """
        phi_x = self.field(x)
        phi_y_dag = self.field(y).conj().T
        value = bracket(phi_x, phi_y_dag, self.model.statistics)
        c = c_number_bracket(self.model, x - y)
        norm = self.fock.restricted_norm(value, BRACKET_DEPTH)
        defect = self.fock.restricted_norm(value - c * np.eye(self.fock.dim), BRACKET_DEPTH)
        return norm, defect

    def same_field_bracket_norm(self, x: SpacetimePoint, y: SpacetimePoint) -> Optional[float]:
        """||[Phi(x), Phi(y)]||, restricted; vanishes for charged fields."""
        phi_x, phi_y = self.field(x), self.field(y)
        return self.fock.restricted_norm(phi_x @ phi_y - phi_y @ phi_x, BRACKET_DEPTH)

    def product_commutator_norm(self, x: SpacetimePoint, y: SpacetimePoint) -> Optional[float]:
        """||[Phi(x) Phi^dag(x), Phi(y) Phi^dag(y)]||, restricted to depth 3."""
        columns = self.fock.restricted_indices(BILINEAR_DEPTH, self.bilinear_raises)
        if columns.size == 0:
            logger.warning("no exact input states for bilinear commutator: cap=%s", self.model.particle_cap)
            return None
        phi_x, phi_y = self.field(x), self.field(y)
        obs_x = phi_x @ phi_x.conj().T
        obs_y = phi_y @ phi_y.conj().T
        value = obs_x @ obs_y[:, columns] - obs_y @ obs_x[:, columns]
        return float(np.linalg.norm(value, 2))


def _refinement(model: FieldModel, sep: SpacetimePoint) -> Optional[tuple[float, float]]:
    if classify_interval(sep) is not IntervalType.SPACELIKE:
        return None
    return refinement_envelopes(model, sep)


def build_field_operator(model: FieldModel, point: SpacetimePoint, budget: int = DEFAULT_BUDGET) -> Operator:
    """Phi(point) on the truncated Fock space of `model`."""
    return ScalarField(model, budget).field_operator(point)


def operator_bracket_scan(
    model: FieldModel,
    grid: Sequence[SpacetimePoint],
    origin: SpacetimePoint = SpacetimePoint(),
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> BracketScan:
    """
    Operator-level bracket scan: for each separation sep, x = origin + sep
    and y = origin.
    """
    field = ScalarField(model, budget)

    def row(sep: SpacetimePoint) -> BracketRow:
        x = origin + sep
        norm, defect = field.bracket_norms(x, origin)
        return BracketRow.from_values(
            sep=sep,
            interval_type=classify_interval(sep),
            delta_plus_forward=delta_plus(model, sep),
            delta_plus_backward=delta_plus(model, -sep),
            c_number_bracket=c_number_bracket(model, sep),
            operator_bracket_norm=norm,
            bracket_defect=defect,
            product_commutator_norm=field.product_commutator_norm(x, origin),
            refinement=_refinement(model, sep),
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, grid))
    else:
        rows = [row(sep) for sep in grid]
    logger.debug("operator scan: %d points, fock dim %d", len(rows), field.fock.dim)
    return BracketScan(model=model, level="operator", rows=rows)


def c_number_scan(model: FieldModel, grid: Sequence[SpacetimePoint], continuum: bool = False) -> BracketScan:
    """
    Mode-sum scan. With `continuum`, spacelike rows also carry the
    infinite-volume value of delta_plus from quadrature.
    """

    def oracle(sep: SpacetimePoint) -> Optional[float]:
        if not continuum or classify_interval(sep) is not IntervalType.SPACELIKE:
            return None
        return continuum_delta_plus(model.mass, sep)

    rows = [
        BracketRow.from_values(
            sep=sep,
            interval_type=classify_interval(sep),
            delta_plus_forward=delta_plus(model, sep),
            delta_plus_backward=delta_plus(model, -sep),
            c_number_bracket=c_number_bracket(model, sep),
            continuum_delta_plus=oracle(sep),
            refinement=_refinement(model, sep),
        )
        for sep in grid
    ]
    return BracketScan(model=model, level="c-number", rows=rows)


def operator_refinement(
    model: FieldModel,
    n_max_values: Sequence[int],
    sep: SpacetimePoint,
    budget: int = DEFAULT_BUDGET,
) -> list[Optional[float]]:
    """Bilinear commutator norm at separation sep for each mode cutoff."""
    origin = SpacetimePoint()
    norms = []
    for n_max in n_max_values:
        field = ScalarField(model.refined(n_max), budget)
        norms.append(field.product_commutator_norm(origin + sep, origin))
        logger.debug("operator refinement: n_max=%d norm=%s", n_max, norms[-1])
    return norms
