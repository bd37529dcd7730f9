"""
Microcausal Spinor Field (1+1 dimensions)

Two-component Dirac field in the periodic box. Representation:
alpha = sigma_z, beta = sigma_y, so the one-particle Hamiltonian is
h(k) = k sigma_z + m sigma_y and is purely imaginary in position space.

    u(k) = (m, i(omega - k)) / sqrt(2 omega (omega - k))    h(k) u = +omega u
    u(-k)^*                                                 h(k) v = -omega v

    psi(t, x) = L^(-1/2) sum_n [b_n u(k_n) e^{-i phi_n} + d_n^dag u(k_n)^* e^{+i phi_n}]

The Majorana field sets d = b; its components are Hermitian. The
statistics-matched bracket is

    (1/L) sum_n w_n e^{i k_n dx} [P+(k_n) e^{-i omega dt} +- P-(k_n) e^{+i omega dt}]

with + for anticommutators (Fermi) and - for commutators (Bose),
P+- = projectors on the positive/negative energy spinors, and w_n = 1 for
a sharp cutoff or 1 - |n|/(n_max + 1) for Fejer summation.
"""

import logging
import math
from itertools import product as pairs
from typing import Literal, Optional, Sequence

import numpy as np

from microcausal.core.canon import FieldClass, Statistics
from microcausal.core.operator import Operator
from microcausal.errors import UnsupportedStatistics
from microcausal.field.fock import DEFAULT_BUDGET, FockSpace
from microcausal.field.model import FieldModel, SpacetimePoint, classify_interval
from microcausal.field.operators import BILINEAR_DEPTH, BRACKET_DEPTH, ScalarField, bracket
from microcausal.field.pinching import pinching_check
from microcausal.field.schemas import FermionDemoReport, PinchingSummary
from microcausal.quantum.states import Observable

logger = logging.getLogger(__name__)

Summation = Literal["sharp", "fejer"]

DEMO_TOL = 1e-9


def positive_energy_spinors(model: FieldModel) -> np.ndarray:
    """u(k_n) for every mode, shape (2 n_max + 1, 2)."""
    k, omega, m = model.momenta, model.energies, model.mass
    norm = np.sqrt(2.0 * omega * (omega - k))
    return np.stack([m / norm, 1j * (omega - k) / norm], axis=1)


def summation_weights(model: FieldModel, summation: Summation) -> np.ndarray:
    if summation == "sharp":
        return np.ones(model.n_field_modes)
    return 1.0 - np.abs(model.mode_numbers) / (model.n_max + 1.0)


def spinor_bracket(
    model: FieldModel,
    sep: SpacetimePoint,
    statistics: Optional[Statistics] = None,
    summation: Summation = "sharp",
) -> np.ndarray:
    """c-number 2x2 bracket matrix [psi_a(x), psi_b^dag(y)]_+- at sep = x - y."""
    stats = model.statistics if statistics is None else Statistics(statistics)
    u = positive_energy_spinors(model)
    p_plus = np.einsum("na,nb->nab", u, u.conj())
    p_minus = np.eye(2)[np.newaxis, :, :] - p_plus
    omega = model.energies
    weights = summation_weights(model, summation) * np.exp(1j * model.momenta * sep.x) / model.box_length
    forward = np.exp(-1j * omega * sep.t)
    backward = np.exp(1j * omega * sep.t)
    terms = p_plus * forward[:, None, None] + stats.bracket_sign * p_minus * backward[:, None, None]
    return np.einsum("n,nab->ab", weights, terms)


def bracket_refinement(
    model: FieldModel,
    n_max_values: Sequence[int],
    sep: SpacetimePoint,
    statistics: Optional[Statistics] = None,
    summation: Summation = "fejer",
) -> list[float]:
    """Largest component magnitude of the spinor bracket for each mode cutoff."""
    return [
        float(np.abs(spinor_bracket(model.refined(n), sep, statistics, summation)).max())
        for n in n_max_values
    ]


class SpinorModel:
    """
    Fock-space realization of the spinor field.

    Ladder operators follow the model statistics; Bose statistics give the
    wrong-statistics spinor row of the bracket table.

    Raises:
        BudgetExceeded: If the Fock space is larger than the budget.
    """

    def __init__(self, model: FieldModel, majorana: bool = True, budget: int = DEFAULT_BUDGET) -> None:
        self.model = model
        self.majorana = majorana
        m = model.n_field_modes
        self.fock = FockSpace(
            n_modes=m if majorana else 2 * m,
            statistics=model.statistics,
            occupation_cutoff=model.occupation_cutoff,
            particle_cap=model.particle_cap,
            budget=budget,
        )
        self._b = [self.fock.annihilator(j) for j in range(m)]
        self._d = self._b if majorana else [self.fock.annihilator(m + j) for j in range(m)]
        self._u = positive_energy_spinors(model)

    def components(self, point: SpacetimePoint) -> tuple[np.ndarray, np.ndarray]:
        phases = np.exp(-1j * (self.model.energies * point.t - self.model.momenta * point.x))
        scale = 1.0 / np.sqrt(self.model.box_length)
        out = []
        for a in range(2):
            psi = np.zeros((self.fock.dim, self.fock.dim), dtype=np.complex128)
            for n in range(self.model.n_field_modes):
                psi += self._u[n, a] * phases[n] * self._b[n]
                psi += np.conj(self._u[n, a] * phases[n]) * self._d[n].T
            out.append(scale * psi)
        return out[0], out[1]

    def component_operator(self, point: SpacetimePoint, a: int) -> Operator:
        return Operator(self.components(point)[a], label=f"psi{a}({point.t:g},{point.x:g})")

    @property
    def bilinear_raises(self) -> int:
        return BILINEAR_DEPTH if self.majorana else math.ceil(BILINEAR_DEPTH / 2)

    def bracket_defect(self, x: SpacetimePoint, y: SpacetimePoint) -> Optional[float]:
        """max_ab ||[psi_a(x), psi_b^dag(y)]_+- - S_ab(x - y) I||, restricted."""
        psi_x, psi_y = self.components(x), self.components(y)
        expected = spinor_bracket(self.model, x - y)
        eye = np.eye(self.fock.dim)
        worst: Optional[float] = None
        for a, b in pairs(range(2), range(2)):
            value = bracket(psi_x[a], psi_y[b].conj().T, self.model.statistics) - expected[a, b] * eye
            norm = self.fock.restricted_norm(value, BRACKET_DEPTH)
            if norm is not None:
                worst = norm if worst is None else max(worst, norm)
        return worst

    def density_commutator_norm(self, x: SpacetimePoint, y: SpacetimePoint) -> Optional[float]:
        """||[sum_a psi_a psi_a^dag (x), sum_a psi_a psi_a^dag (y)]||, restricted to depth 3."""
        columns = self.fock.restricted_indices(BILINEAR_DEPTH, self.bilinear_raises)
        if columns.size == 0:
            logger.warning("no exact input states for density commutator: cap=%s", self.model.particle_cap)
            return None
        rho_x = sum(p @ p.conj().T for p in self.components(x))
        rho_y = sum(p @ p.conj().T for p in self.components(y))
        value = rho_x @ rho_y[:, columns] - rho_y @ rho_x[:, columns]
        return float(np.linalg.norm(value, 2))


def dirac_mode_model(model: FieldModel, majorana: bool = False, budget: int = DEFAULT_BUDGET) -> SpinorModel:
    return SpinorModel(model, majorana=majorana, budget=budget)


def _max_norm(fock: FockSpace, matrices: Sequence[np.ndarray]) -> float:
    norms = [fock.restricted_norm(m, BRACKET_DEPTH) for m in matrices]
    return max((n for n in norms if n is not None), default=0.0)


def fermion_measurability_demo(
    model: FieldModel,
    x: SpacetimePoint,
    y: SpacetimePoint,
    tol: float = DEMO_TOL,
    budget: int = DEFAULT_BUDGET,
) -> FermionDemoReport:
    """
    A Hermitian Fermi field cannot be an observable at spacelike separation.

    For a Hermitian field anticommuting at x, y, the commutator equals
    2 Phi(x) Phi(y); commutation would force Phi(x) Phi(y) = 0, which fails.
    The verdict is not_measurable when the anticommutator vanishes while
    commutator and product do not; inconclusive otherwise.

    DiracLike models use the Majorana spinor components; ScalarLike models
    the Hermitian scalar field with Fermi statistics. Norms are maxima over
    component pairs, restricted to depth-1 exact inputs.

    Raises:
        UnsupportedStatistics: For Bose models.
    """
    if model.statistics is not Statistics.FERMI:
        raise UnsupportedStatistics("the measurability demo requires a Fermi field")

    if model.field_class is FieldClass.DIRAC_LIKE:
        spinor = SpinorModel(model, majorana=True, budget=budget)
        fock = spinor.fock
        fields_x, fields_y = spinor.components(x), spinor.components(y)
        field_name = "majorana-spinor"
    else:
        scalar = ScalarField(model.model_copy(update={"hermitian": True}), budget)
        fock = scalar.fock
        fields_x, fields_y = (scalar.field(x),), (scalar.field(y),)
        field_name = "hermitian-scalar"

    anti, comm, prod = [], [], []
    for phi_x, phi_y in pairs(fields_x, fields_y):
        xy, yx = phi_x @ phi_y, phi_y @ phi_x
        anti.append(xy + yx)
        comm.append(xy - yx)
        prod.append(xy)
    anticomm_norm = _max_norm(fock, anti)
    comm_norm = _max_norm(fock, comm)
    product_norm = _max_norm(fock, prod)

    pinching = pinching_check(Observable.from_operator(Operator(fields_x[0])), Operator(fields_y[0]), tol=tol)
    not_measurable = anticomm_norm <= tol and comm_norm > tol and product_norm > tol
    logger.debug(
        "fermion demo: anticomm=%.3e comm=%.3e product=%.3e", anticomm_norm, comm_norm, product_norm
    )
    return FermionDemoReport(
        model=model,
        x=x,
        y=y,
        interval_type=classify_interval(x - y),
        field=field_name,
        anticomm_norm=anticomm_norm,
        comm_norm=comm_norm,
        product_norm=product_norm,
        tolerance=tol,
        verdict="not_measurable" if not_measurable else "inconclusive",
        pinching=PinchingSummary(
            pinched=pinching.pinched,
            residual=pinching.residual,
            commutator_residual=pinching.commutator_residual,
            consistent=pinching.consistent,
        ),
    )
