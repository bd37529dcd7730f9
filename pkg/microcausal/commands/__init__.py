"""
Microcausal Commands

Batch subcommands of the microcausal CLI, grouped as
nosignal (factorize, check), protocol (signal) and
field (field-scan, fermion-demo, pauli-jordan).
"""

from microcausal.commands.base import CommandBase, CommandResult
from microcausal.commands.field import FermionDemoCommand, FieldScanCommand, PauliJordanCommand
from microcausal.commands.nosignal import CheckCommand, FactorizeCommand
from microcausal.commands.protocol import SignalCommand
from microcausal.commands.registry import CommandRegistry
from microcausal.commands.schemas import CommandMetadata, RunConfig


def default_registry() -> CommandRegistry:
    registry = CommandRegistry()
    for command in (
        FactorizeCommand(),
        CheckCommand(),
        SignalCommand(),
        FieldScanCommand(),
        FermionDemoCommand(),
        PauliJordanCommand(),
    ):
        registry.register(command)
    return registry


__all__ = [
    "CommandBase",
    "CommandResult",
    "CommandRegistry",
    "CommandMetadata",
    "RunConfig",
    "default_registry",
    "FactorizeCommand",
    "CheckCommand",
    "SignalCommand",
    "FieldScanCommand",
    "FermionDemoCommand",
    "PauliJordanCommand",
]
