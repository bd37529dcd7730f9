"""
Microcausal Signal Command

Runs an Alice/Bob protocol file. Exit 1 means signalling was
demonstrated, which is the expected outcome for non-product evolutions.
"""

import argparse
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from microcausal.commands.base import CommandBase, CommandResult
from microcausal.commands.schemas import CommandMetadata, SignalConfig
from microcausal.core.canon import ExitCode
from microcausal.errors import InputFormatError
from microcausal.protocol.schemas import ProtocolFile
from microcausal.protocol.signal import simulate_protocol
from microcausal.settings import Settings


def load_protocol(path: Path) -> ProtocolFile:
    """
    Raises:
        InputFormatError: If the file is unreadable or does not validate.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read protocol file {path}: {exc.strerror}") from exc
    try:
        return ProtocolFile.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise InputFormatError(f"malformed protocol file {path}: {location}: {first['msg']}") from exc


class SignalCommand(CommandBase):
    config_model = SignalConfig

    def __init__(self) -> None:
        super().__init__(
            CommandMetadata(
                name="signal",
                group="protocol",
                description="Simulate a signalling protocol: exact and sampled Bob marginals",
            )
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("protocol", nargs="?", type=Path, default=None, help="protocol file")
        parser.add_argument("--shots", type=int, default=None)

    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        return {"protocol": args.protocol, "shots": args.shots}

    def run(self, config: SignalConfig, settings: Settings) -> CommandResult:
        protocol = load_protocol(config.protocol)
        spec = protocol.to_spec(shots=config.shots, seed=config.seed)
        report = simulate_protocol(spec, error_targets=protocol.error_targets, tol=config.tol, threads=settings.threads)
        return CommandResult(
            exit_code=ExitCode.VIOLATED if report.signalling else ExitCode.HOLDS,
            report=report,
            artifact=report.distribution_csv(),
        )
