"""
Microcausal CLI - Main Entry Point

    microcausal <command> [flags]

Exit codes: 0 condition holds / unitary factorizes / no signal,
1 violation found / signalling demonstrated, 2 invalid input.
Reports go to stdout, diagnostics and logs to stderr.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from microcausal import __version__
from microcausal.commands import CommandRegistry, default_registry
from microcausal.commands.base import CommandResult
from microcausal.core.canon import EXIT_CODE_TABLE, ExitCode
from microcausal.errors import MicrocausalError
from microcausal.lifespan import run_context
from microcausal.settings import Settings


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("common")
    group.add_argument("--config", type=Path, default=None, help="JSON run config; flags override it")
    group.add_argument("--seed", type=int, default=None)
    group.add_argument("--tol", type=float, default=None)
    group.add_argument("--out", type=Path, default=None, help="write the report (or CSV) to this file")
    group.add_argument("--threads", type=int, default=None)
    group.add_argument("--fock-budget", type=int, default=None)
    group.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None)


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    epilog = "exit codes: " + "; ".join(f"{e.code.value} = {e.meaning}" for e in EXIT_CODE_TABLE)
    parser = argparse.ArgumentParser(
        prog="microcausal",
        description="Numerical checks of no-signalling, factorization and field microcausality",
        epilog=epilog,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in registry.all_commands():
        sub = subparsers.add_parser(command.name, help=command.metadata.description)
        command.add_arguments(sub)
        _add_common_arguments(sub)
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    values = {"threads": args.threads, "fock_budget": args.fock_budget, "log_level": args.log_level}
    return Settings(**{k: v for k, v in values.items() if v is not None})


def _emit(result: CommandResult, out: Optional[Path]) -> None:
    if out is not None:
        out.write_text(result.artifact if result.artifact is not None else result.report_json)
        sys.stdout.write(result.report_json)
    elif result.artifact is not None and result.artifact_on_stdout:
        sys.stdout.write(result.artifact)
    else:
        sys.stdout.write(result.report_json)


def main(argv: Optional[Sequence[str]] = None) -> int:
    registry = default_registry()
    parser = build_parser(registry)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else int(ExitCode.INVALID)

    command = registry.get(args.command)
    try:
        settings = _settings(args)
        with run_context(settings):
            config = command.load_config(args)
            result = command.run(config, settings)
            _emit(result, config.out)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or exc.title
        print(f"error: invalid {command.name} config: {location}: {first['msg']}", file=sys.stderr)
        return int(ExitCode.INVALID)
    except MicrocausalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.INVALID)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.INVALID)
    return int(result.exit_code)


if __name__ == "__main__":
    sys.exit(main())
