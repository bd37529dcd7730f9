"""
Microcausal Field Model

Free field in a 1+1-dimensional periodic box of length L, natural units.
Modes k_n = 2 pi n / L for n in [-n_max, n_max], omega_n = sqrt(k_n^2 + m^2).

This module holds the c-number layer: the positive-frequency two-point
function as a mode sum, its continuum limit, interval classification and
the four-case bracket.
"""

import logging
from enum import Enum
from typing import Any, Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate, special

from microcausal.core.canon import FieldClass, Statistics, get_bracket_case

logger = logging.getLogger(__name__)

LIGHTLIKE_TOL = 1e-12

# boosted spacelike rows are judged on how the bracket behaves under cutoff refinement
REFINEMENT_GROWTH = 8
REFINEMENT_FLOOR = 256
REFINEMENT_DECAY = 0.25


class FieldModel(BaseModel):
    """
    Parameters of a truncated free field.

    Fermi statistics force occupation_cutoff to 1. `hermitian` selects a
    self-conjugate field (antiparticle ladder = particle ladder).
    `particle_cap` bounds the total occupation of the truncated Fock space
    (None: no cap).
    """

    model_config = ConfigDict(frozen=True)

    mass: float = Field(default=1.0, gt=0.0)
    box_length: float = Field(default=40.0, gt=0.0)
    n_max: int = Field(default=2000, ge=0)
    statistics: Statistics = Statistics.BOSE
    field_class: FieldClass = FieldClass.SCALAR_LIKE
    occupation_cutoff: int = Field(default=2, ge=1)
    hermitian: bool = False
    particle_cap: Optional[int] = Field(default=3, ge=1)

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        for key in ("statistics", "field_class"):
            if isinstance(data.get(key), str) and not isinstance(data[key], Enum):
                data[key] = data[key].lower()
        if Statistics(data.get("statistics", Statistics.BOSE)) is Statistics.FERMI:
            data["occupation_cutoff"] = 1
        return data

    @property
    def mode_numbers(self) -> np.ndarray:
        return np.arange(-self.n_max, self.n_max + 1)

    @property
    def momenta(self) -> np.ndarray:
        return 2.0 * np.pi * self.mode_numbers / self.box_length

    @property
    def energies(self) -> np.ndarray:
        return np.sqrt(self.momenta**2 + self.mass**2)

    @property
    def n_field_modes(self) -> int:
        return 2 * self.n_max + 1

    def refined(self, n_max: int) -> "FieldModel":
        return self.model_copy(update={"n_max": n_max})


class SpacetimePoint(BaseModel):
    """Event (t, x); also used for separations x - y."""

    model_config = ConfigDict(frozen=True)

    t: float = 0.0
    x: float = 0.0

    def __neg__(self) -> "SpacetimePoint":
        return SpacetimePoint(t=-self.t, x=-self.x)

    def __add__(self, other: "SpacetimePoint") -> "SpacetimePoint":
        return SpacetimePoint(t=self.t + other.t, x=self.x + other.x)

    def __sub__(self, other: "SpacetimePoint") -> "SpacetimePoint":
        return SpacetimePoint(t=self.t - other.t, x=self.x - other.x)


class IntervalType(str, Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def classify_interval(sep: SpacetimePoint) -> IntervalType:
    """Lightlike within 1e-12; otherwise spacelike iff |t| < |x| strictly."""
    if abs(abs(sep.t) - abs(sep.x)) <= LIGHTLIKE_TOL:
        return IntervalType.LIGHTLIKE
    if abs(sep.t) < abs(sep.x):
        return IntervalType.SPACELIKE
    return IntervalType.TIMELIKE


def delta_plus(model: FieldModel, sep: SpacetimePoint) -> complex:
    """
    sum_n exp(-i(omega_n t - k_n x)) / (2 L omega_n).

    The sine parts cancel between n and -n, so the sum is evaluated with
    cos(k_n x); this makes the result exactly even in x.
    """
    omega = model.energies
    terms = np.exp(-1j * omega * sep.t) * np.cos(model.momenta * sep.x) / (2.0 * model.box_length * omega)
    return complex(terms.sum())


def continuum_delta_plus(mass: float, sep: SpacetimePoint, method: Literal["quad", "bessel"] = "quad") -> float:
    """
    Infinite-volume two-point function at a spacelike separation.

    With s = sqrt(x^2 - t^2) > 0 the value is (1/2pi) int_0^inf cos(p s)/omega dp
    = K0(m s) / (2 pi). "quad" integrates with QUADPACK's Fourier weight,
    "bessel" evaluates the closed form.

    Raises:
        ValueError: Unless the separation is strictly spacelike.
    """
    if classify_interval(sep) is not IntervalType.SPACELIKE:
        raise ValueError(f"continuum value implemented for spacelike separations only, got {sep}")
    s = float(np.sqrt(sep.x**2 - sep.t**2))
    if method == "bessel":
        return float(special.k0(mass * s) / (2.0 * np.pi))
    value, _ = integrate.quad(lambda p: 1.0 / np.sqrt(p * p + mass * mass), 0.0, np.inf, weight="cos", wvar=s)
    return float(value / (2.0 * np.pi))


def c_number_bracket(model: FieldModel, sep: SpacetimePoint) -> complex:
    """
    delta_plus(sep) + sign * delta_plus(-sep) with the sign of the
    (field class, statistics) row of the bracket table.
    """
    case = get_bracket_case(model.field_class, model.statistics)
    return delta_plus(model, sep) + case.sign * delta_plus(model, -sep)


def bracket_partial_sums(model: FieldModel, sep: SpacetimePoint, n_max: int) -> np.ndarray:
    """c_number_bracket of `model` refined to every cutoff 0..n_max; index = cutoff."""
    case = get_bracket_case(model.field_class, model.statistics)
    k = 2.0 * np.pi * np.arange(n_max + 1) / model.box_length
    omega = np.sqrt(k**2 + model.mass**2)
    phase = np.exp(-1j * omega * sep.t)
    terms = (phase + case.sign * np.conj(phase)) * np.cos(k * sep.x) / (2.0 * model.box_length * omega)
    terms[1:] *= 2.0
    return np.cumsum(terms)


def refinement_envelopes(model: FieldModel, sep: SpacetimePoint) -> tuple[float, float]:
    """
    Largest |bracket| over cutoffs [N, 2N] and over [G, 2G], with N the model
    cutoff and G = max(REFINEMENT_GROWTH * N, REFINEMENT_FLOOR).

    A bracket whose limit is zero has partial sums bounded by C / cutoff, so
    the late envelope is about N / G of the early one; a nonzero limit keeps
    both envelopes at that limit.
    """
    n = max(model.n_max, 1)
    late = max(REFINEMENT_GROWTH * n, REFINEMENT_FLOOR)
    sums = np.abs(bracket_partial_sums(model, sep, 2 * late))
    return float(sums[n : 2 * n + 1].max()), float(sums[late:].max())


def vanishes_under_refinement(early: float, late: float, tol: float) -> bool:
    return late <= tol or late <= REFINEMENT_DECAY * early


def spacelike_grid(
    x_values: Sequence[float], t: float = 0.0
) -> list[SpacetimePoint]:
    return [SpacetimePoint(t=t, x=float(x)) for x in x_values]


def default_c_number_grid() -> list[SpacetimePoint]:
    """t = 0, x = 0.2, 0.4, ..., 4.0."""
    return spacelike_grid([round(0.2 * i, 10) for i in range(1, 21)])
