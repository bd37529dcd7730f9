"""
Microcausal Settings

Process-wide knobs for one CLI run. Per-command parameters live in the
run-config models of microcausal.commands.schemas.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from microcausal.field.fock import DEFAULT_BUDGET

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    fock_budget: int = Field(default=DEFAULT_BUDGET, ge=1, description="Largest admissible Fock basis")
    threads: int = Field(default=1, ge=1, description="Worker threads for sampling and scans")
    log_level: LogLevel = "WARNING"
