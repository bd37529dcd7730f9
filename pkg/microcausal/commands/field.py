"""
Microcausal Field Commands

field-scan: bracket scan at c-number or operator level; exit 0 when the
statistics-matched bracket vanishes at every spacelike grid point
(equal-time points by value, boosted points under cutoff refinement),
exit 1 ("microcausality violated") otherwise.

fermion-demo: measurability of a Hermitian Fermi field.

pauli-jordan: table of the mode-sum two-point function with the
continuum oracle alongside.
"""

import argparse
import logging
from typing import Any, Optional

from microcausal.commands.base import CommandBase, CommandResult
from microcausal.commands.schemas import (
    CommandMetadata,
    FermionDemoConfig,
    FieldScanConfig,
    PauliJordanConfig,
)
from microcausal.core.canon import ExitCode, FieldClass, Statistics
from microcausal.field.operators import c_number_scan, operator_bracket_scan
from microcausal.field.spinor import fermion_measurability_demo
from microcausal.settings import Settings

logger = logging.getLogger(__name__)


def add_model_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("field model")
    group.add_argument("--mass", type=float, default=None)
    group.add_argument("--box-length", type=float, default=None)
    group.add_argument("--n-max", type=int, default=None)
    group.add_argument("--statistics", choices=[s.value for s in Statistics], default=None)
    group.add_argument("--field-class", choices=[c.value for c in FieldClass], default=None)
    group.add_argument("--occupation-cutoff", type=int, default=None)
    group.add_argument("--particle-cap", type=int, default=None)
    group.add_argument("--hermitian", action="store_true", default=None)


def model_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "mass": args.mass,
        "box_length": args.box_length,
        "n_max": args.n_max,
        "statistics": args.statistics,
        "field_class": args.field_class,
        "occupation_cutoff": args.occupation_cutoff,
        "particle_cap": args.particle_cap,
        "hermitian": args.hermitian,
    }


def add_grid_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t", type=float, default=None, help="time separation shared by the grid")
    parser.add_argument("--x", type=float, nargs="+", default=None, help="space separations")


def grid_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {"t": args.t, "x_values": args.x}


def _point(values: Optional[list[float]]) -> Optional[dict[str, float]]:
    return None if values is None else {"t": values[0], "x": values[1]}


class FieldScanCommand(CommandBase):
    config_model = FieldScanConfig

    def __init__(self) -> None:
        super().__init__(
            CommandMetadata(
                name="field-scan",
                group="field",
                description="Scan the statistics-matched field bracket over separations (CSV)",
            )
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--level", choices=["c-number", "operator"], default=None)
        add_model_arguments(parser)
        add_grid_arguments(parser)

    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        return {"level": args.level, "model": model_overrides(args), "grid": grid_overrides(args)}

    def run(self, config: FieldScanConfig, settings: Settings) -> CommandResult:
        grid = config.grid.points(config.level)
        if config.level == "operator":
            scan = operator_bracket_scan(
                config.model, grid, origin=config.origin, budget=settings.fock_budget, threads=settings.threads
            )
        else:
            scan = c_number_scan(config.model, grid)
        summary = scan.summary(config.tol)
        if not summary.microcausal:
            logger.info(
                "microcausality violated: max spacelike bracket %.3e, max boosted refined bracket %s",
                summary.max_spacelike_bracket,
                summary.max_boosted_refined_bracket,
            )
        return CommandResult(
            exit_code=ExitCode.HOLDS if summary.microcausal else ExitCode.VIOLATED,
            report=summary,
            artifact=scan.to_csv(),
            artifact_on_stdout=True,
        )


class FermionDemoCommand(CommandBase):
    config_model = FermionDemoConfig

    def __init__(self) -> None:
        super().__init__(
            CommandMetadata(
                name="fermion-demo",
                group="field",
                description="Show that a Hermitian Fermi field is not an observable at spacelike separation",
            )
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_model_arguments(parser)
        parser.add_argument("--x", type=float, nargs=2, metavar=("T", "X"), default=None)
        parser.add_argument("--y", type=float, nargs=2, metavar=("T", "X"), default=None)

    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        return {"model": model_overrides(args), "x": _point(args.x), "y": _point(args.y)}

    def run(self, config: FermionDemoConfig, settings: Settings) -> CommandResult:
        report = fermion_measurability_demo(
            config.model, config.x, config.y, tol=config.tol, budget=settings.fock_budget
        )
        code = ExitCode.HOLDS if report.verdict == "not_measurable" else ExitCode.VIOLATED
        return CommandResult(exit_code=code, report=report)


class PauliJordanCommand(CommandBase):
    config_model = PauliJordanConfig

    def __init__(self) -> None:
        super().__init__(
            CommandMetadata(
                name="pauli-jordan",
                group="field",
                description="Tabulate the mode-sum two-point function (c-number level only)",
            )
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_model_arguments(parser)
        add_grid_arguments(parser)
        parser.add_argument(
            "--no-continuum", dest="continuum", action="store_false", default=None, help="skip the quadrature column"
        )

    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        return {"model": model_overrides(args), "grid": grid_overrides(args), "continuum": args.continuum}

    def run(self, config: PauliJordanConfig, settings: Settings) -> CommandResult:
        scan = c_number_scan(config.model, config.grid.points("c-number"), continuum=config.continuum)
        summary = scan.summary(config.tol).model_copy(update={"operation": "pauli-jordan"})
        return CommandResult(
            exit_code=ExitCode.HOLDS, report=summary, artifact=scan.to_csv(), artifact_on_stdout=True
        )
