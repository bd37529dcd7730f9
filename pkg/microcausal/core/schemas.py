"""
Microcausal Operator File Schema

Text format for operators used by every CLI input file: a JSON document
with the dimension and a flat row-major list of [re, im] pairs.
"""

import json
import logging
from pathlib import Path
from typing import Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from microcausal.core.operator import Operator
from microcausal.errors import InputFormatError

logger = logging.getLogger(__name__)


class OperatorFile(BaseModel):
    """Serialized operator: dim and dim*dim (re, im) pairs in row-major order."""

    dim: int = Field(..., ge=1)
    entries: list[tuple[float, float]]
    label: str = ""

    @model_validator(mode="after")
    def _check_entry_count(self) -> "OperatorFile":
        expected = self.dim * self.dim
        if len(self.entries) != expected:
            raise ValueError(f"expected {expected} entries for dim {self.dim}, got {len(self.entries)}")
        return self

    def to_operator(self) -> Operator:
        flat = np.array([complex(re, im) for re, im in self.entries], dtype=np.complex128)
        return Operator(flat.reshape(self.dim, self.dim), label=self.label)

    @classmethod
    def from_operator(cls, op: Operator) -> "OperatorFile":
        flat = op.matrix.reshape(-1)
        return cls(
            dim=op.dim,
            entries=[(float(z.real), float(z.imag)) for z in flat],
            label=op.label,
        )


def parse_operator(text: str) -> Operator:
    """Parse operator-file text; raise InputFormatError on any defect."""
    try:
        return OperatorFile.model_validate_json(text).to_operator()
    except ValidationError as exc:
        raise InputFormatError(f"malformed operator file: {exc.error_count()} error(s); {exc.errors()[0]['msg']}") from exc


def load_operator(path: Union[str, Path]) -> Operator:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read operator file {path}: {exc.strerror}") from exc
    op = parse_operator(text)
    logger.debug("loaded operator dim=%d from %s", op.dim, path)
    return op


def dump_operator(op: Operator, path: Union[str, Path]) -> None:
    document = OperatorFile.from_operator(op).model_dump()
    Path(path).write_text(json.dumps(document, indent=2) + "\n")
