import pytest

from microcausal.core.canon import (
    BRACKET_TABLE,
    ExitCode,
    FieldClass,
    Statistics,
    describe_exit_code,
    get_bracket_case,
    microcausal_cases,
)


def test_bracket_table_has_four_cases():
    assert len(BRACKET_TABLE) == 4
    assert {(c.field_class, c.statistics) for c in BRACKET_TABLE} == {
        (fc, st) for fc in FieldClass for st in Statistics
    }


def test_only_spin_statistics_matched_cases_are_microcausal():
    matched = {(c.field_class, c.statistics) for c in microcausal_cases()}
    assert matched == {(FieldClass.SCALAR_LIKE, Statistics.BOSE), (FieldClass.DIRAC_LIKE, Statistics.FERMI)}
    for case in BRACKET_TABLE:
        assert case.microcausal == (case.combination == "difference")


@pytest.mark.parametrize(
    "field_class, statistics, sign",
    [("scalar", "bose", -1), ("SCALAR", "Fermi", 1), ("dirac", "fermi", -1), ("Dirac", "BOSE", 1)],
)
def test_lookup_is_case_insensitive(field_class, statistics, sign):
    assert get_bracket_case(field_class, statistics).sign == sign


def test_statistics_bracket_sign():
    assert Statistics.BOSE.bracket_sign == -1
    assert Statistics.FERMI.bracket_sign == 1
    assert Statistics.FERMI.bracket_name == "anticommutator"


def test_exit_codes():
    assert int(ExitCode.INVALID) == 2
    assert "invalid" in describe_exit_code(2)
    assert describe_exit_code(7) is None
