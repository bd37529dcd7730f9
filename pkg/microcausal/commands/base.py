"""
Microcausal Command Base Class

Abstract base class for all subcommands. A command declares its flags,
turns parsed flags into config overrides, and runs a validated config.
"""

import argparse
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, ClassVar, Optional

from pydantic import BaseModel

from microcausal.commands.schemas import CommandMetadata, RunConfig
from microcausal.core.canon import ExitCode
from microcausal.errors import InputFormatError
from microcausal.settings import Settings


@dataclass(frozen=True)
class CommandResult:
    """
    Outcome of one run.

    `artifact` is the CSV side output, if any. With --out it goes to the
    file; without, it replaces the report on stdout when `artifact_on_stdout`.
    """

    exit_code: ExitCode
    report: BaseModel
    artifact: Optional[str] = None
    artifact_on_stdout: bool = False

    @property
    def report_json(self) -> str:
        return self.report.model_dump_json(indent=2) + "\n"


def read_config_file(path: Path) -> dict[str, Any]:
    try:
        document = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputFormatError(f"cannot read config file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"config file {path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    if not isinstance(document, dict):
        raise InputFormatError(f"config file {path} must hold a JSON object")
    return document


def merge_overrides(base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    """Nested update; None values in overrides are skipped."""
    merged = dict(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_overrides(merged[key], value)
        elif isinstance(value, dict):
            merged[key] = {k: v for k, v in value.items() if v is not None}
        else:
            merged[key] = value
    return merged


class CommandBase(ABC):
    """
    Abstract base class for subcommands.

    Each command:
        - Declares its flags on an argparse subparser
        - Maps parsed flags to config overrides
        - Runs a validated config and returns a CommandResult
    """

    config_model: ClassVar[type[RunConfig]]

    def __init__(self, metadata: CommandMetadata) -> None:
        self._metadata = metadata

    @property
    def metadata(self) -> CommandMetadata:
        """Get command metadata."""
        return self._metadata

    @property
    def name(self) -> str:
        return self._metadata.name

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare command-specific flags. Every default must be None."""
        raise NotImplementedError

    @abstractmethod
    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        """Config keys set explicitly on the command line."""
        raise NotImplementedError

    @abstractmethod
    def run(self, config: RunConfig, settings: Settings) -> CommandResult:
        raise NotImplementedError

    def load_config(self, args: argparse.Namespace) -> RunConfig:
        """
        Config file, then shared flags, then command flags.

        Raises:
            InputFormatError: If the config file cannot be read.
            pydantic.ValidationError: If the merged document is invalid.
        """
        data = read_config_file(args.config) if args.config is not None else {}
        shared = {"seed": args.seed, "out": args.out}
        if args.tol is not None and "tol" in self.config_model.model_fields:
            shared["tol"] = args.tol
        data = merge_overrides(data, shared)
        data = merge_overrides(data, self.overrides(args))
        return self.config_model.model_validate(data)
