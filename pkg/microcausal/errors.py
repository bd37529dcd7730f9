"""
Microcausal Error Hierarchy

Every failure raised by the toolkit derives from MicrocausalError.
Domain outcomes (a condition holding or failing, a unitary factorizing
or not) are return values, never exceptions.

@provenance microcausal_errors_v1
@layer kernel
"""

from typing import Optional


class MicrocausalError(Exception):
    """Root of all toolkit errors."""


class DimensionMismatch(MicrocausalError, ValueError):
    """Operand dimensions disagree."""


class NotHermitian(MicrocausalError, ValueError):
    """An operator expected to be Hermitian is not."""


class NotUnitary(MicrocausalError, ValueError):
    """An operator expected to be unitary is not."""


class InvalidState(MicrocausalError, ValueError):
    """A matrix fails the density-matrix invariants."""


class NotTracePreserving(MicrocausalError, ValueError):
    """A Kraus list does not sum to the identity."""


class BudgetExceeded(MicrocausalError, ValueError):
    """A truncated Fock space is larger than the configured budget."""

    def __init__(self, dimension: int, budget: int, detail: Optional[str] = None) -> None:
        self.dimension = dimension
        self.budget = budget
        message = f"Fock dimension {dimension} exceeds budget {budget}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class UnsupportedFieldClass(MicrocausalError, ValueError):
    """The requested construction does not exist for this field class."""


class UnsupportedStatistics(MicrocausalError, ValueError):
    """The requested construction does not exist for these statistics."""


class InputFormatError(MicrocausalError, ValueError):
    """An input file could not be parsed."""


class InternalInconsistency(MicrocausalError, RuntimeError):
    """
    Two computations that must agree did not.

    Signals a bug in the toolkit, never a property of the input.
    """
