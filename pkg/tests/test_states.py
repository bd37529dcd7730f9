import numpy as np
import pytest

from microcausal.core.operator import Operator
from microcausal.errors import DimensionMismatch, InvalidState, NotTracePreserving
from microcausal.quantum.states import DensityMatrix, KrausChannel


def test_density_matrix_rejects_wrong_trace():
    with pytest.raises(InvalidState, match="trace"):
        DensityMatrix(Operator(np.eye(2)))


def test_density_matrix_rejects_negative_eigenvalue():
    with pytest.raises(InvalidState, match="negative eigenvalue"):
        DensityMatrix(Operator(np.diag([1.5, -0.5])))


def test_density_matrix_rejects_non_hermitian():
    with pytest.raises(InvalidState, match="not Hermitian"):
        DensityMatrix(Operator(np.array([[0.5, 0.5], [0.0, 0.5]])))


def test_pure_state_normalizes():
    rho = DensityMatrix.pure([1, 1j])
    np.testing.assert_allclose(rho.matrix, 0.5 * np.array([[1, -1j], [1j, 1]]))
    with pytest.raises(InvalidState):
        DensityMatrix.pure([0, 0])


def test_from_matrix_normalize():
    rho = DensityMatrix.from_matrix(np.diag([1.0, 3.0]), normalize=True)
    np.testing.assert_allclose(np.diag(rho.matrix).real, [0.25, 0.75])


def test_probabilities_follow_ascending_eigenvalues(sigma_z):
    zero = DensityMatrix.pure([1, 0])
    # eigenvalue -1 (|1>) comes first
    np.testing.assert_allclose(zero.probabilities(sigma_z.spectral), [0.0, 1.0])
    np.testing.assert_allclose(DensityMatrix.maximally_mixed(2).probabilities(sigma_z.spectral), [0.5, 0.5])


def test_probabilities_dimension_mismatch(sigma_z):
    with pytest.raises(DimensionMismatch):
        DensityMatrix.maximally_mixed(3).probabilities(sigma_z.spectral)


def test_kraus_channel_invariants():
    with pytest.raises(NotTracePreserving, match="empty"):
        KrausChannel(())
    with pytest.raises(NotTracePreserving):
        KrausChannel((Operator(0.5 * np.eye(2)),))
    with pytest.raises(DimensionMismatch):
        KrausChannel((Operator.identity(2), Operator.identity(3)))


def test_kraus_channel_accepts_amplitude_damping():
    g = 0.3
    k0 = Operator(np.array([[1, 0], [0, np.sqrt(1 - g)]]))
    k1 = Operator(np.array([[0, np.sqrt(g)], [0, 0]]))
    channel = KrausChannel([k0, k1])
    assert isinstance(channel.kraus, tuple)
    assert len(channel) == 2
    assert channel.dim == 2
