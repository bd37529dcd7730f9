import logging

import pytest
from pydantic import ValidationError

import microcausal.globals as g
from microcausal.field.fock import DEFAULT_BUDGET
from microcausal.globals import get_settings
from microcausal.lifespan import run_context
from microcausal.settings import Settings


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def test_defaults():
    settings = Settings()
    assert settings.fock_budget == DEFAULT_BUDGET
    assert settings.threads == 1
    assert settings.log_level == "WARNING"


def test_validation():
    with pytest.raises(ValidationError):
        Settings(threads=0)
    with pytest.raises(ValidationError):
        Settings(log_level="TRACE")
    with pytest.raises(ValidationError):
        Settings().threads = 2


def test_get_settings_outside_a_run():
    with pytest.raises(RuntimeError, match="run_context"):
        get_settings()


def test_run_context_installs_and_clears():
    settings = Settings(threads=3, log_level="DEBUG")
    with run_context(settings) as active:
        assert active is settings
        assert get_settings() is settings
        assert logging.getLogger().level == logging.DEBUG
    assert g.settings is None


def test_run_context_clears_on_error():
    with pytest.raises(ZeroDivisionError):
        with run_context(Settings()):
            1 / 0
    assert g.settings is None
