"""
Microcausal Command Schemas

Pydantic models for command metadata and per-command run configs.

A run config is assembled from an optional JSON document (--config) with
explicit flags layered on top. Numbers may be JSON numbers or decimal
strings; both are converted by float(), i.e. rounded to the nearest
binary64 value (ties to even).
"""

import math
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from microcausal.core.canon import FieldClass, Statistics
from microcausal.field.model import FieldModel, SpacetimePoint, default_c_number_grid, spacelike_grid
from microcausal.nosignal.conditions import ANALYTIC_TOL, SAMPLED_TOL
from microcausal.protocol.signal import SIGNAL_TOL

CommandGroup = Literal["nosignal", "protocol", "field"]
CheckMode = Literal["mc-analytic", "mc-sampled", "c-sampled"]
ScanLevel = Literal["c-number", "operator"]

OPERATOR_GRID_X = (0.5, 1.0, 1.5)


class CommandMetadata(BaseModel):
    """Metadata describing a subcommand."""

    name: str
    group: CommandGroup
    version: str = "1.0.0"
    description: str = ""


class RunConfig(BaseModel):
    """Fields shared by every command; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")

    seed: int = 0
    out: Optional[Path] = None


class FactorizeConfig(RunConfig):
    input: Path
    dims: tuple[int, int]
    tol: float = Field(default=ANALYTIC_TOL, gt=0.0)


class CheckConfig(RunConfig):
    input: Path
    dims: tuple[int, int]
    mode: CheckMode = "mc-analytic"
    n_samples: int = Field(default=100, ge=1)
    tol: Optional[float] = Field(default=None, gt=0.0)
    product_states: bool = False

    @property
    def tolerance(self) -> float:
        if self.tol is not None:
            return self.tol
        return ANALYTIC_TOL if self.mode == "mc-analytic" else SAMPLED_TOL


class SignalConfig(RunConfig):
    """shots and seed default to the protocol file's values."""

    protocol: Path
    shots: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None  # type: ignore[assignment]
    tol: float = Field(default=SIGNAL_TOL, ge=0.0)


class GridSpec(BaseModel):
    """Separations (t, x) for x in x_values, all at the same t."""

    model_config = ConfigDict(extra="forbid")

    t: float = 0.0
    x_values: Optional[list[float]] = None

    def points(self, level: ScanLevel) -> list[SpacetimePoint]:
        if self.x_values is not None:
            return spacelike_grid(self.x_values, t=self.t)
        if level == "operator":
            return spacelike_grid(OPERATOR_GRID_X, t=self.t)
        if self.t == 0.0:
            return default_c_number_grid()
        return [SpacetimePoint(t=self.t, x=p.x) for p in default_c_number_grid()]


def _with_model_defaults(data: Any, defaults: dict[str, Any]) -> Any:
    if not isinstance(data, dict):
        return data
    data = dict(data)
    model = data.get("model", {})
    if isinstance(model, dict):
        data["model"] = {**defaults, **model}
    return data


class FieldScanConfig(RunConfig):
    level: ScanLevel = "c-number"
    model: FieldModel = Field(default_factory=FieldModel)
    grid: GridSpec = Field(default_factory=GridSpec)
    origin: SpacetimePoint = Field(default_factory=SpacetimePoint)
    tol: float = Field(default=1e-6, gt=0.0)

    @model_validator(mode="before")
    @classmethod
    def _operator_defaults(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("level") == "operator":
            return _with_model_defaults(data, {"box_length": 2.0 * math.pi, "n_max": 2})
        return data


class FermionDemoConfig(RunConfig):
    model: FieldModel
    x: SpacetimePoint = Field(default_factory=lambda: SpacetimePoint(t=0.0, x=0.0))
    y: SpacetimePoint = Field(default_factory=lambda: SpacetimePoint(t=0.0, x=2.0))
    tol: float = Field(default=1e-9, gt=0.0)

    @model_validator(mode="before")
    @classmethod
    def _demo_defaults(cls, data: Any) -> Any:
        return _with_model_defaults(
            data,
            {
                "box_length": 18.0,
                "n_max": 4,
                "statistics": Statistics.FERMI,
                "field_class": FieldClass.DIRAC_LIKE,
            },
        )


class PauliJordanConfig(RunConfig):
    model: FieldModel = Field(default_factory=FieldModel)
    grid: GridSpec = Field(default_factory=GridSpec)
    continuum: bool = True
    tol: float = Field(default=1e-6, gt=0.0)
