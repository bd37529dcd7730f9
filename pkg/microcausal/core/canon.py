"""
Microcausal Canon

Static lookup data shared across layers:

- The four-case bracket table: which (field class, statistics) pairs yield a
  difference of two-point functions (vanishing at spacelike separation) and
  which yield a sum (not vanishing).
- The exit-code table of the command-line surface.

Both tables are data, exported for documentation and looked up by name.

@provenance microcausal_canon_v1
@layer kernel
"""

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional


class FieldClass(str, Enum):
    """Field class selecting the sign pattern of the two-point bracket."""

    SCALAR_LIKE = "scalar"
    DIRAC_LIKE = "dirac"


class Statistics(str, Enum):
    """Quantization rule for the ladder operators."""

    BOSE = "bose"
    FERMI = "fermi"

    @property
    def bracket_name(self) -> str:
        return "commutator" if self is Statistics.BOSE else "anticommutator"

    @property
    def bracket_sign(self) -> int:
        """Sign s in XY + s*YX: -1 for the commutator, +1 for the anticommutator."""
        return -1 if self is Statistics.BOSE else 1


@dataclass(frozen=True)
class BracketCase:
    """
    One row of the four-case bracket table.

    The c-number bracket is delta_plus(sep) + sign * delta_plus(-sep).
    """

    field_class: FieldClass
    statistics: Statistics
    sign: int
    microcausal: bool  # vanishes at every spacelike separation
    description: str

    @property
    def combination(self) -> str:
        return "difference" if self.sign < 0 else "sum"


# =============================================================================
# THE BRACKET TABLE
# =============================================================================

BRACKET_TABLE: tuple[BracketCase, ...] = (
    BracketCase(
        field_class=FieldClass.SCALAR_LIKE,
        statistics=Statistics.BOSE,
        sign=-1,
        microcausal=True,
        description="scalar or vector field quantized with commutators",
    ),
    BracketCase(
        field_class=FieldClass.SCALAR_LIKE,
        statistics=Statistics.FERMI,
        sign=+1,
        microcausal=False,
        description="scalar or vector field quantized with anticommutators",
    ),
    BracketCase(
        field_class=FieldClass.DIRAC_LIKE,
        statistics=Statistics.FERMI,
        sign=-1,
        microcausal=True,
        description="Dirac field quantized with anticommutators",
    ),
    BracketCase(
        field_class=FieldClass.DIRAC_LIKE,
        statistics=Statistics.BOSE,
        sign=+1,
        microcausal=False,
        description="Dirac field quantized with commutators",
    ),
)


def get_bracket_case(field_class: FieldClass | str, statistics: Statistics | str) -> BracketCase:
    """
    Look up the bracket case for a field class and statistics.

    Accepts enum members or their values, case-insensitive.
    """
    fc = FieldClass(field_class.lower()) if isinstance(field_class, str) else field_class
    st = Statistics(statistics.lower()) if isinstance(statistics, str) else statistics
    for case in BRACKET_TABLE:
        if case.field_class is fc and case.statistics is st:
            return case
    raise KeyError(f"no bracket case for ({fc.value}, {st.value})")


def microcausal_cases() -> tuple[BracketCase, ...]:
    return tuple(case for case in BRACKET_TABLE if case.microcausal)


# =============================================================================
# EXIT CODES
# =============================================================================


class ExitCode(IntEnum):
    HOLDS = 0
    VIOLATED = 1
    INVALID = 2


@dataclass(frozen=True)
class ExitCodeEntry:
    code: ExitCode
    meaning: str


EXIT_CODE_TABLE: tuple[ExitCodeEntry, ...] = (
    ExitCodeEntry(ExitCode.HOLDS, "condition holds, unitary factorizes, or no signal"),
    ExitCodeEntry(ExitCode.VIOLATED, "violation found or signalling demonstrated"),
    ExitCodeEntry(ExitCode.INVALID, "invalid input, failed precondition or budget overflow"),
)


def describe_exit_code(code: int) -> Optional[str]:
    for entry in EXIT_CODE_TABLE:
        if entry.code == code:
            return entry.meaning
    return None
