"""
Microcausal Verdict Schemas

Pydantic models for the machine-readable verdict report shared by the
factorize, check and signal commands.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field

from microcausal.core.operator import BipartiteDims
from microcausal.core.schemas import OperatorFile
from microcausal.nosignal.conditions import (
    BlockWitness,
    ChannelWitness,
    Holds,
    MeasurementWitness,
    Verdict,
    Witness,
)
from microcausal.nosignal.factorize import FactorizationResult, Product

VerdictName = Literal["holds", "violated", "product", "not_product"]


class WitnessPayload(BaseModel):
    """Inputs that exhibit a violation."""

    kind: Literal["blocks", "measurement", "channel"]
    indices: Optional[list[int]] = Field(default=None, description="(k, k', l, l') of the worst block product")
    sample_index: Optional[int] = None
    state: Optional[OperatorFile] = None
    observable: Optional[OperatorFile] = None
    kraus: Optional[list[OperatorFile]] = None

    @classmethod
    def from_witness(cls, witness: Witness) -> "WitnessPayload":
        if isinstance(witness, BlockWitness):
            return cls(kind="blocks", indices=list(witness.indices))
        if isinstance(witness, MeasurementWitness):
            return cls(
                kind="measurement",
                sample_index=witness.sample_index,
                state=OperatorFile.from_operator(witness.state.op),
                observable=OperatorFile.from_operator(witness.observable.op),
            )
        if isinstance(witness, ChannelWitness):
            return cls(
                kind="channel",
                sample_index=witness.pair_index,
                state=OperatorFile.from_operator(witness.state.op),
                kraus=[OperatorFile.from_operator(k) for k in witness.channel.kraus],
            )
        raise TypeError(f"unknown witness type {type(witness).__name__}")


class FactorsPayload(BaseModel):
    u1: OperatorFile
    u2: OperatorFile
    phase: float
    reconstruction_error: float


class VerdictReport(BaseModel):
    """Verdict of one check; `residual` is the worst deviation found."""

    operation: str
    dims: tuple[int, int]
    verdict: VerdictName
    witness: Optional[WitnessPayload] = None
    residual: float
    tolerance: float
    seed: Optional[int] = None
    evaluations: Optional[int] = None
    factors: Optional[FactorsPayload] = None
    schmidt_rank: Optional[int] = None
    singular_values: Optional[list[float]] = None

    @property
    def holds(self) -> bool:
        return self.verdict in ("holds", "product")


def verdict_report(
    operation: str,
    dims: BipartiteDims,
    verdict: Verdict,
    tolerance: float,
    seed: Optional[int] = None,
) -> VerdictReport:
    if isinstance(verdict, Holds):
        return VerdictReport(
            operation=operation,
            dims=(dims.d1, dims.d2),
            verdict="holds",
            residual=verdict.max_deviation,
            tolerance=tolerance,
            seed=seed,
            evaluations=verdict.evaluations,
        )
    return VerdictReport(
        operation=operation,
        dims=(dims.d1, dims.d2),
        verdict="violated",
        witness=WitnessPayload.from_witness(verdict.witness),
        residual=verdict.deviation,
        tolerance=tolerance,
        seed=seed,
        evaluations=verdict.evaluations,
    )


def factorization_report(
    result: FactorizationResult,
    schmidt_rank: Optional[int] = None,
    singular_values: Optional[list[float]] = None,
) -> VerdictReport:
    dims = (result.dims.d1, result.dims.d2)
    if isinstance(result.verdict, Product):
        v = result.verdict
        return VerdictReport(
            operation="factorize",
            dims=dims,
            verdict="product",
            residual=v.reconstruction_error,
            tolerance=result.tolerance,
            factors=FactorsPayload(
                u1=OperatorFile.from_operator(v.u1),
                u2=OperatorFile.from_operator(v.u2),
                phase=v.phase,
                reconstruction_error=v.reconstruction_error,
            ),
            schmidt_rank=schmidt_rank,
            singular_values=singular_values,
        )
    return VerdictReport(
        operation="factorize",
        dims=dims,
        verdict="not_product",
        witness=WitnessPayload(kind="blocks", indices=list(result.verdict.witness)),
        residual=result.verdict.residual,
        tolerance=result.tolerance,
        schmidt_rank=schmidt_rank,
        singular_values=singular_values,
    )
