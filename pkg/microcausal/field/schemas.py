"""
Microcausal Field Schemas

Pydantic models for bracket scans (CSV rows) and the fermion demo report.
"""

import csv
import io
from typing import Literal, Optional

from pydantic import BaseModel

from microcausal.core.canon import FieldClass, Statistics
from microcausal.field.model import FieldModel, IntervalType, SpacetimePoint, vanishes_under_refinement

CSV_COLUMNS = (
    "t",
    "x",
    "interval_type",
    "delta_plus_forward_re",
    "delta_plus_forward_im",
    "delta_plus_backward_re",
    "delta_plus_backward_im",
    "c_number_bracket_re",
    "c_number_bracket_im",
    "operator_bracket_norm",
    "bracket_defect",
    "product_commutator_norm",
    "continuum_delta_plus",
    "refinement_early",
    "refinement_late",
)


def _csv_float(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


class BracketRow(BaseModel):
    """One separation of a bracket scan; operator columns are None at c-number level."""

    t: float
    x: float
    interval_type: IntervalType
    delta_plus_forward_re: float
    delta_plus_forward_im: float
    delta_plus_backward_re: float
    delta_plus_backward_im: float
    c_number_bracket_re: float
    c_number_bracket_im: float
    operator_bracket_norm: Optional[float] = None
    bracket_defect: Optional[float] = None
    product_commutator_norm: Optional[float] = None
    continuum_delta_plus: Optional[float] = None
    refinement_early: Optional[float] = None
    refinement_late: Optional[float] = None

    @classmethod
    def from_values(
        cls,
        sep: SpacetimePoint,
        interval_type: IntervalType,
        delta_plus_forward: complex,
        delta_plus_backward: complex,
        c_number_bracket: complex,
        operator_bracket_norm: Optional[float] = None,
        bracket_defect: Optional[float] = None,
        product_commutator_norm: Optional[float] = None,
        continuum_delta_plus: Optional[float] = None,
        refinement: Optional[tuple[float, float]] = None,
    ) -> "BracketRow":
        return cls(
            t=sep.t,
            x=sep.x,
            interval_type=interval_type,
            delta_plus_forward_re=delta_plus_forward.real,
            delta_plus_forward_im=delta_plus_forward.imag,
            delta_plus_backward_re=delta_plus_backward.real,
            delta_plus_backward_im=delta_plus_backward.imag,
            c_number_bracket_re=c_number_bracket.real,
            c_number_bracket_im=c_number_bracket.imag,
            operator_bracket_norm=operator_bracket_norm,
            bracket_defect=bracket_defect,
            product_commutator_norm=product_commutator_norm,
            continuum_delta_plus=continuum_delta_plus,
            refinement_early=None if refinement is None else refinement[0],
            refinement_late=None if refinement is None else refinement[1],
        )

    @property
    def c_number_bracket(self) -> complex:
        return complex(self.c_number_bracket_re, self.c_number_bracket_im)

    @property
    def boosted(self) -> bool:
        return self.t != 0.0

    def bracket_value(self, level: str) -> Optional[float]:
        if level == "operator":
            return self.operator_bracket_norm
        return abs(self.c_number_bracket)

    def vanishes(self, level: str, tol: float) -> Optional[bool]:
        """
        Verdict of one spacelike row; None when the row is not asserted.

        Equal-time rows compare the bracket itself with `tol`. Boosted rows
        are judged on the refinement envelopes, and at operator level the
        bracket must also equal the c-number bracket times the identity.
        """
        if self.interval_type is not IntervalType.SPACELIKE:
            return None
        if not self.boosted:
            value = self.bracket_value(level)
            return None if value is None else value <= tol
        if self.refinement_early is None or self.refinement_late is None:
            return None
        if level == "operator" and self.bracket_defect is not None and self.bracket_defect > tol:
            return False
        return vanishes_under_refinement(self.refinement_early, self.refinement_late, tol)

    def csv_row(self) -> list[str]:
        values = self.model_dump()
        row = []
        for column in CSV_COLUMNS:
            value = values[column]
            if column == "interval_type":
                row.append(value.value)
            else:
                row.append(_csv_float(value))
        return row


class BracketScan(BaseModel):
    model: FieldModel
    level: Literal["c-number", "operator"]
    rows: list[BracketRow]

    def spacelike_rows(self) -> list[BracketRow]:
        return [r for r in self.rows if r.interval_type is IntervalType.SPACELIKE]

    def max_spacelike_bracket(self) -> float:
        """Largest statistics-matched bracket over strictly spacelike rows."""
        rows = self.spacelike_rows()
        if self.level == "operator":
            return max((r.operator_bracket_norm for r in rows if r.operator_bracket_norm is not None), default=0.0)
        return max((abs(r.c_number_bracket) for r in rows), default=0.0)

    def summary(self, tol: float) -> "ScanSummary":
        spacelike = self.spacelike_rows()
        verdicts = [v for v in (r.vanishes(self.level, tol) for r in spacelike) if v is not None]
        boosted = [r.refinement_late for r in spacelike if r.boosted and r.refinement_late is not None]
        return ScanSummary(
            level=self.level,
            statistics=self.model.statistics,
            field_class=self.model.field_class,
            points=len(self.rows),
            spacelike_points=len(spacelike),
            asserted_points=len(verdicts),
            boosted_points=len(boosted),
            max_spacelike_bracket=self.max_spacelike_bracket(),
            max_boosted_refined_bracket=max(boosted, default=None),
            tolerance=tol,
            microcausal=all(verdicts),
        )

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(row.csv_row())
        return buffer.getvalue()


class ScanSummary(BaseModel):
    """
    Verdict of a scan: microcausal iff every asserted spacelike row vanishes.

    Equal-time rows are asserted on the bracket value, boosted rows on the
    refinement envelopes (see BracketRow.vanishes).
    """

    operation: str = "field-scan"
    level: Literal["c-number", "operator"]
    statistics: Statistics
    field_class: FieldClass
    points: int
    spacelike_points: int
    asserted_points: int
    boosted_points: int
    max_spacelike_bracket: float
    max_boosted_refined_bracket: Optional[float] = None
    tolerance: float
    microcausal: bool


class PinchingSummary(BaseModel):
    pinched: bool
    residual: float
    commutator_residual: float
    consistent: bool


class FermionDemoReport(BaseModel):
    """Norms are maxima over field component pairs, restricted to exact inputs."""

    operation: str = "fermion-demo"
    model: FieldModel
    x: SpacetimePoint
    y: SpacetimePoint
    interval_type: IntervalType
    field: Literal["majorana-spinor", "hermitian-scalar"]
    anticomm_norm: float
    comm_norm: float
    product_norm: float
    tolerance: float
    verdict: Literal["not_measurable", "inconclusive"]
    pinching: PinchingSummary
