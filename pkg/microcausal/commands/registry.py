"""
Microcausal Command Registry

Name-keyed registry of subcommands; main builds its parser from it.
"""

from typing import Optional

from microcausal.commands.base import CommandBase


class CommandRegistry:
    """Registry of subcommands in registration order."""

    def __init__(self) -> None:
        self._commands: dict[str, CommandBase] = {}

    def register(self, command: CommandBase) -> None:
        """
        Register a command under its metadata name.

        Raises:
            ValueError: If the name is taken.
        """
        if command.name in self._commands:
            raise ValueError(f"Command '{command.name}' already registered")
        self._commands[command.name] = command

    def get(self, name: str) -> Optional[CommandBase]:
        return self._commands.get(name)

    def all_commands(self) -> list[CommandBase]:
        return list(self._commands.values())

    def command_names(self) -> list[str]:
        return list(self._commands.keys())

    def by_group(self, group: str) -> list[CommandBase]:
        return [c for c in self._commands.values() if c.metadata.group == group]

    def __len__(self) -> int:
        return len(self._commands)

    def __contains__(self, name: str) -> bool:
        return name in self._commands
