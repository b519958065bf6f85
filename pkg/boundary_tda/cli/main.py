"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import TYPE_CHECKING, NoReturn

import colorlog

from boundary_tda.const import EXIT_COMPUTATION, EXIT_USAGE, LOGGER, PROG_NAME
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import BoundaryTdaError, UsageError
from boundary_tda.persistence import RadiusScale

from .artifacts import write_artifacts
from .commands import run_command
from .schemas import Command, OutputFormat, build_run_config

if TYPE_CHECKING:
    from collections.abc import Sequence

_HANDLER_NAME = "boundary_tda.cli"
_LOG_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"

_COMMAND_HELP = {
    Command.BOUND: "compute the sample-size bound n*",
    Command.SWEEP_GAMMA: "tabulate n* over the failure probability",
    Command.SWEEP_EPS: "tabulate n* over the offset radius",
    Command.SAMPLE: "draw a uniform sample",
    Command.DENSITY: "certify ε-density of a sample",
    Command.PERSISTENCE: "compute a Vietoris–Rips barcode",
    Command.CRITERIA: "compare reconstruction criteria",
    Command.PIPELINE: "sample, certify, compute persistence and check H1",
}


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports errors as UsageError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def configure_logging(*, verbose: bool = False) -> None:
    """Install a colored stderr handler on the package logger, replacing an earlier one."""
    for handler in list(LOGGER.handlers):
        if handler.get_name() == _HANDLER_NAME:
            LOGGER.removeHandler(handler)
    handler = colorlog.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(colorlog.ColoredFormatter(_LOG_FORMAT))
    LOGGER.addHandler(handler)
    LOGGER.setLevel(logging.DEBUG if verbose else logging.INFO)


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--manifold", choices=[str(k) for k in ManifoldKind], help="built-in manifold")
    parser.add_argument("--eps", type=float, help="offset radius ε")
    parser.add_argument("--gamma", type=float, help="failure probability γ")
    parser.add_argument("--n", type=int, help="sample size (default: n*)")
    parser.add_argument("--seed", type=int, help="RNG seed")
    parser.add_argument("--r-max", dest="r_max", type=float, help="Rips truncation, diameter scale")
    parser.add_argument("--max-dim", dest="max_dim", type=int, help="largest simplex dimension")
    parser.add_argument("--mesh-h", dest="mesh_h", type=float, help="reference mesh covering radius")
    parser.add_argument("--net-radius", dest="net_radius", type=float, help="thinning radius, 0 disables")
    parser.add_argument("--top-k", dest="top_k", type=int, help="bars reported per dimension")
    parser.add_argument("--dominance-factor", dest="dominance_factor", type=float, help="dominant bar ratio")
    parser.add_argument("--scale", choices=[str(s) for s in RadiusScale], help="barcode axis scale")
    parser.add_argument("--out", dest="out_path", help="output file (pipeline: directory)")
    parser.add_argument("--format", choices=[str(f) for f in OutputFormat], help="output encoding")
    parser.add_argument("--cloud", dest="cloud_path", help="point cloud file to use instead of sampling")
    parser.add_argument("--example", action="store_true", help="use the eight-point semicircle example")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = _Parser(prog=PROG_NAME, description="Sampling bounds and homology recovery for manifolds with boundary.")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in Command:
        _add_common_arguments(subparsers.add_parser(str(command), help=_COMMAND_HELP[command]))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None.

    Returns:
        0 on success, 1 on usage errors, 2 on computation errors, 3 when
        homology verification fails.

    """
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
        configure_logging(verbose=bool(args.verbose))
        config = build_run_config(vars(args))
    except UsageError as exception:
        LOGGER.error("Usage error: %s", exception)  # noqa: TRY400
        return EXIT_USAGE

    LOGGER.info("Running %s on %s", config.command, config.manifold)
    try:
        output = run_command(config)
        write_artifacts(output.artifacts)
    except UsageError as exception:
        LOGGER.error("Usage error: %s", exception)  # noqa: TRY400
        return EXIT_USAGE
    except BoundaryTdaError as exception:
        LOGGER.error("%s failed: %s", config.command, exception)  # noqa: TRY400
        LOGGER.debug("Traceback", exc_info=True)
        return EXIT_COMPUTATION
    except OSError:
        LOGGER.exception("Could not write artifacts")
        return EXIT_COMPUTATION

    if output.stdout:
        sys.stdout.write(output.stdout)
    return output.exit_code
