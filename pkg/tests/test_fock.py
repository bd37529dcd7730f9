import logging

import numpy as np
import pytest

from microcausal.core.canon import Statistics
from microcausal.errors import BudgetExceeded
from microcausal.field.fock import FockSpace, count_states


def test_dimension_matches_enumeration():
    fock = FockSpace(4, Statistics.BOSE, occupation_cutoff=2, particle_cap=3)
    assert fock.dim == 31
    assert count_states(4, 2, 3) == 31
    assert count_states(3, 2, None) == 27
    assert FockSpace(3, Statistics.BOSE, occupation_cutoff=2, particle_cap=None).dim == 27


def test_fermi_forces_single_occupation():
    fock = FockSpace(5, Statistics.FERMI, occupation_cutoff=4, particle_cap=2)
    assert fock.occupation_cutoff == 1
    assert fock.dim == 1 + 5 + 10
    assert fock.basis.max() == 1


def test_budget_overflow():
    with pytest.raises(BudgetExceeded, match="59049"):
        FockSpace(10, Statistics.BOSE, occupation_cutoff=2, particle_cap=None)


def test_rejects_empty_mode_set():
    with pytest.raises(ValueError, match="n_modes"):
        FockSpace(0, Statistics.BOSE)


def test_basis_lookup():
    fock = FockSpace(4, Statistics.BOSE, occupation_cutoff=2, particle_cap=3)
    assert fock.vacuum_index() == 0
    assert fock.basis[0].tolist() == [0, 0, 0, 0]
    for index, occupation in enumerate(fock.basis):
        assert fock.index_of(tuple(occupation)) == index
    with pytest.raises(KeyError):
        fock.index_of((2, 2, 0, 0))


def test_bose_ladder_amplitudes():
    fock = FockSpace(2, Statistics.BOSE, occupation_cutoff=2, particle_cap=None)
    a0 = fock.annihilator(0)
    assert a0[fock.index_of((1, 1)), fock.index_of((2, 1))] == pytest.approx(np.sqrt(2))
    np.testing.assert_array_equal(fock.creator(0), a0.T)


def test_canonical_commutators_on_exact_inputs():
    fock = FockSpace(3, Statistics.BOSE, occupation_cutoff=2, particle_cap=3)
    eye = np.eye(fock.dim)
    for i in range(3):
        for j in range(3):
            ai, aj_dag = fock.annihilator(i), fock.creator(j)
            defect = ai @ aj_dag - aj_dag @ ai - (i == j) * eye
            assert fock.restricted_norm(defect, 1) < 1e-12
            ai_aj = ai @ fock.annihilator(j) - fock.annihilator(j) @ ai
            assert np.abs(ai_aj).max() == 0.0


def test_canonical_anticommutators_with_jordan_wigner_signs():
    fock = FockSpace(4, Statistics.FERMI, particle_cap=3)
    eye = np.eye(fock.dim)
    for i in range(4):
        for j in range(4):
            ai, aj = fock.annihilator(i), fock.annihilator(j)
            assert np.abs(ai @ aj + aj @ ai).max() == 0.0
            defect = ai @ aj.T + aj.T @ ai - (i == j) * eye
            assert fock.restricted_norm(defect, 1) < 1e-12


def test_number_operator_is_sum_of_mode_numbers():
    fock = FockSpace(3, Statistics.BOSE, occupation_cutoff=2, particle_cap=3)
    total = sum(fock.creator(j) @ fock.annihilator(j) for j in range(3))
    np.testing.assert_allclose(total, fock.number_operator())


def test_restricted_indices_by_depth():
    fock = FockSpace(4, Statistics.FERMI, particle_cap=3)
    assert fock.restricted_indices(3).tolist() == [0]
    assert len(fock.restricted_indices(1)) == 1 + 4 + 6
    bose = FockSpace(2, Statistics.BOSE, occupation_cutoff=2, particle_cap=3)
    assert set(bose.restricted_indices(1).tolist()) == {
        bose.index_of(o) for o in [(0, 0), (0, 1), (1, 0), (1, 1)]
    }


def test_empty_restricted_subspace_warns(caplog):
    fock = FockSpace(2, Statistics.BOSE, occupation_cutoff=2, particle_cap=3)
    with caplog.at_level(logging.WARNING, logger="microcausal.field.fock"):
        assert fock.restricted_norm(np.eye(fock.dim), 3) is None
    assert "restricted subspace is empty" in caplog.text
