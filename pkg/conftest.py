import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from microcausal.core.operator import Operator  # noqa: E402
from microcausal.core.schemas import dump_operator  # noqa: E402
from microcausal.quantum.gates import CNOT, PAULI_X, PAULI_Y, PAULI_Z, bell_state  # noqa: E402
from microcausal.quantum.states import Observable  # noqa: E402


@pytest.fixture
def pauli():
    return {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}


@pytest.fixture
def sigma_x():
    return Observable.from_operator(PAULI_X)


@pytest.fixture
def sigma_z():
    return Observable.from_operator(PAULI_Z)


@pytest.fixture
def bell():
    return bell_state("phi_plus")


@pytest.fixture
def cnot():
    return CNOT


@pytest.fixture
def write_operator(tmp_path):
    """Write an operator (or raw matrix) to an operator file and return the path."""

    def write(op, name="op.json"):
        path = tmp_path / name
        dump_operator(op if isinstance(op, Operator) else Operator(np.asarray(op)), path)
        return path

    return write


@pytest.fixture
def write_json(tmp_path):
    def write(document, name="doc.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return write
