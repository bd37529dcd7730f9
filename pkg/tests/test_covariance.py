import numpy as np
import pytest
from scipy.linalg import expm

from microcausal.core.operator import Operator, tensor_product
from microcausal.errors import DimensionMismatch
from microcausal.nosignal import covariance
from microcausal.nosignal.covariance import (
    Consistent,
    Inconsistent,
    check_covariance_reordering,
    factorized_generator,
)
from microcausal.quantum.channels import depolarizing_channel, projector_channel, random_channel
from microcausal.quantum.gates import PAULI_Z, plus_state
from microcausal.quantum.sampling import random_density, random_hermitian

TIMES = (0.0, 0.3, 1.0)


def test_local_dynamics_are_consistent(sigma_x, sigma_z):
    verdict = check_covariance_reordering(sigma_z, sigma_z, projector_channel(sigma_x), plus_state(2), *TIMES)
    assert isinstance(verdict, Consistent)
    assert verdict.composition_residual < 1e-12


@pytest.mark.parametrize("d1, d2", [(2, 2), (3, 3), (2, 3)])
def test_random_local_dynamics_are_consistent(d1, d2):
    for seed in range(50):
        h1, h2 = random_hermitian(d1, seed), random_hermitian(d2, seed + 100)
        psi = random_channel(d1, 3, seed)
        rho = random_density(d1 * d2, seed)
        verdict = check_covariance_reordering(h1, h2, psi, rho, 0.0, 0.4, 1.7)
        assert isinstance(verdict, Consistent)
        assert verdict.deviation <= 1e-10
        assert verdict.composition_residual <= 1e-9


def test_broken_composition_is_inconsistent(monkeypatch, sigma_x, sigma_z):
    monkeypatch.setattr(covariance, "_evolution", lambda h, d: expm(-1j * h * d * d))
    verdict = check_covariance_reordering(sigma_z, sigma_z, projector_channel(sigma_x), plus_state(2), *TIMES)
    assert isinstance(verdict, Inconsistent)
    assert verdict.composition_residual > 1e-9


def test_factorized_generator_gives_the_same_dynamics(sigma_x, sigma_z):
    joint = factorized_generator(sigma_z, sigma_z)
    verdict = check_covariance_reordering(
        sigma_z, sigma_z, projector_channel(sigma_x), plus_state(2), *TIMES, joint_hamiltonian=joint
    )
    assert isinstance(verdict, Consistent)


def test_interacting_hamiltonian_breaks_reordering(sigma_x, sigma_z):
    joint = tensor_product(PAULI_Z, PAULI_Z)
    verdict = check_covariance_reordering(
        sigma_z, sigma_z, projector_channel(sigma_x), plus_state(2), *TIMES, joint_hamiltonian=joint
    )
    assert isinstance(verdict, Inconsistent)
    # off-diagonal of Bob's marginal: cos(2)/2 directly, cos(0.6) cos(1.4)/2 reordered
    expected = np.sqrt(2) * abs(0.5 * np.cos(2.0) - 0.5 * np.cos(0.6) * np.cos(1.4))
    assert verdict.deviation == pytest.approx(expected, rel=1e-9)


def test_times_must_be_ordered(sigma_x, sigma_z):
    with pytest.raises(ValueError, match="t0 <= t1 <= t2"):
        check_covariance_reordering(sigma_z, sigma_z, projector_channel(sigma_x), plus_state(2), 1.0, 0.5, 2.0)


def test_dimension_checks(sigma_z):
    with pytest.raises(DimensionMismatch):
        check_covariance_reordering(sigma_z, sigma_z, random_channel(3, 2, 0), plus_state(2), *TIMES)
    with pytest.raises(DimensionMismatch):
        check_covariance_reordering(sigma_z, sigma_z, depolarizing_channel(), random_density(3, 0), *TIMES)
    with pytest.raises(DimensionMismatch):
        check_covariance_reordering(
            sigma_z, sigma_z, depolarizing_channel(), plus_state(2), *TIMES, joint_hamiltonian=Operator.identity(3)
        )
