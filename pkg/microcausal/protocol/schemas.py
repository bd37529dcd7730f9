"""
Microcausal Protocol Schemas

Pydantic models for the Alice/Bob signalling workflow:
ProtocolFile (input) -> ProtocolSpec (validated) -> SignalReport (output).

Every operator field of a protocol file is either a library name
("cnot", "pauli_x", "bell_phi_plus", ...) or an inline operator document.
"""

import csv
import io
from typing import TYPE_CHECKING, Optional, Union

from pydantic import BaseModel, Field, computed_field

from microcausal.core.operator import BipartiteDims, Operator
from microcausal.core.schemas import OperatorFile
from microcausal.quantum.gates import library_operator, library_state
from microcausal.quantum.states import DensityMatrix, Observable

if TYPE_CHECKING:
    from microcausal.protocol.signal import ProtocolSpec

BOUND_DESCRIPTION = (
    "Hoeffding: Bob decides by the frequency of {y : p0(y) > p1(y)}; "
    "shots >= 2*ln(2/delta)/tv_exact^2 per branch gives error probability <= delta; "
    "unbounded when tv_exact <= epsilon"
)

OperatorRef = Union[str, OperatorFile]


def resolve_operator(ref: OperatorRef) -> Operator:
    if isinstance(ref, str):
        return library_operator(ref)
    return ref.to_operator()


def resolve_state(ref: OperatorRef) -> DensityMatrix:
    if isinstance(ref, str):
        return library_state(ref)
    return DensityMatrix(ref.to_operator())


class ProtocolFile(BaseModel):
    """Protocol input document."""

    dims: tuple[int, int]
    initial_state: OperatorRef
    alice_observable: OperatorRef
    joint_unitary: OperatorRef
    bob_observable: OperatorRef
    shots: int = Field(default=10_000, ge=1)
    seed: int = 0
    error_targets: list[tuple[float, float]] = Field(
        default_factory=lambda: [(1e-10, 0.05), (1e-10, 0.01)],
        description="(epsilon, delta) pairs for the shots table",
    )

    def to_spec(self, shots: Optional[int] = None, seed: Optional[int] = None) -> "ProtocolSpec":
        from microcausal.protocol.signal import ProtocolSpec

        return ProtocolSpec(
            dims=BipartiteDims(*self.dims),
            initial_state=resolve_state(self.initial_state),
            alice_observable=Observable.from_operator(resolve_operator(self.alice_observable)),
            joint_unitary=resolve_operator(self.joint_unitary),
            bob_observable=Observable.from_operator(resolve_operator(self.bob_observable)),
            shots=self.shots if shots is None else shots,
            seed=self.seed if seed is None else seed,
        )


class ShotsBound(BaseModel):
    epsilon: float
    delta: float = Field(..., gt=0.0, lt=1.0)
    shots: Optional[int] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def unbounded(self) -> bool:
        return self.shots is None


class SignalReport(BaseModel):
    """
    Result of one protocol run.

    p0/p1 are Bob's exact outcome distributions without/with Alice's
    measurement, ordered by ascending eigenvalue of Bob's observable.
    """

    operation: str = "signal"
    dims: tuple[int, int]
    bob_eigenvalues: list[float]
    p0: list[float]
    p1: list[float]
    tv_exact: float = Field(..., ge=0.0)
    tv_empirical: float = Field(..., ge=0.0)
    counts0: list[int]
    counts1: list[int]
    shots: int
    seed: int
    tolerance: float
    signalling: bool
    shots_for_error: list[ShotsBound]
    bound: str

    def distribution_csv(self) -> str:
        """Columns outcome_index, p0, p1."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["outcome_index", "p0", "p1"])
        for index, (a, b) in enumerate(zip(self.p0, self.p1)):
            writer.writerow([index, repr(a), repr(b)])
        return buffer.getvalue()
