"""
Microcausal No-Signalling Commands

factorize: constructive product decomposition of a joint unitary.
check: locality verdict in one of three modes.
"""

import argparse
import logging
from pathlib import Path
from typing import Any

from microcausal.commands.base import CommandBase, CommandResult
from microcausal.commands.schemas import CheckConfig, CommandMetadata, FactorizeConfig
from microcausal.core.canon import ExitCode
from microcausal.core.operator import BipartiteDims
from microcausal.core.schemas import load_operator
from microcausal.nosignal.conditions import check_c_sampled, check_mc_analytic, check_mc_sampled
from microcausal.nosignal.factorize import factorize_unitary, operator_schmidt_rank
from microcausal.nosignal.schemas import factorization_report, verdict_report
from microcausal.settings import Settings

logger = logging.getLogger(__name__)


def _add_operator_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", type=Path, default=None, help="operator file of the joint unitary")
    parser.add_argument("--dims", type=int, nargs=2, metavar=("D1", "D2"), default=None)


class FactorizeCommand(CommandBase):
    config_model = FactorizeConfig

    def __init__(self) -> None:
        super().__init__(
            CommandMetadata(
                name="factorize",
                group="nosignal",
                description="Factor a bipartite unitary as a phase times U1 (x) U2, or exhibit a witness",
            )
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_operator_arguments(parser)

    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        return {"input": args.input, "dims": args.dims}

    def run(self, config: FactorizeConfig, settings: Settings) -> CommandResult:
        u = load_operator(config.input)
        dims = BipartiteDims(*config.dims)
        result = factorize_unitary(u, dims, tol=config.tol)
        rank, singular_values = operator_schmidt_rank(u, dims, tol=config.tol)
        report = factorization_report(result, schmidt_rank=rank, singular_values=singular_values)
        code = ExitCode.HOLDS if result.is_product else ExitCode.VIOLATED
        return CommandResult(exit_code=code, report=report)


class CheckCommand(CommandBase):
    config_model = CheckConfig

    def __init__(self) -> None:
        super().__init__(
            CommandMetadata(
                name="check",
                group="nosignal",
                description="Check no-signalling of a joint unitary (mc-analytic, mc-sampled or c-sampled)",
            )
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_operator_arguments(parser)
        parser.add_argument("--mode", choices=["mc-analytic", "mc-sampled", "c-sampled"], default=None)
        parser.add_argument("--n-samples", type=int, default=None)
        parser.add_argument(
            "--product-states", action="store_true", default=None, help="sample product states only"
        )

    def overrides(self, args: argparse.Namespace) -> dict[str, Any]:
        return {
            "input": args.input,
            "dims": args.dims,
            "mode": args.mode,
            "n_samples": args.n_samples,
            "product_states": args.product_states,
        }

    def run(self, config: CheckConfig, settings: Settings) -> CommandResult:
        u = load_operator(config.input)
        dims = BipartiteDims(*config.dims)
        tol = config.tolerance
        if config.mode == "mc-analytic":
            verdict = check_mc_analytic(u, dims, tol=tol)
            seed = None
        elif config.mode == "mc-sampled":
            verdict = check_mc_sampled(
                u,
                dims,
                n_samples=config.n_samples,
                seed=config.seed,
                tol=tol,
                product_states=config.product_states,
                threads=settings.threads,
            )
            seed = config.seed
        else:
            verdict = check_c_sampled(
                u,
                dims,
                n_samples=config.n_samples,
                seed=config.seed,
                tol=tol,
                product_states=config.product_states,
                threads=settings.threads,
            )
            seed = config.seed
        logger.info("check %s: holds=%s", config.mode, verdict.holds)
        report = verdict_report(config.mode, dims, verdict, tolerance=tol, seed=seed)
        return CommandResult(exit_code=ExitCode.HOLDS if verdict.holds else ExitCode.VIOLATED, report=report)
