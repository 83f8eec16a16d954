"""Command-line entry point.

Exit codes: 0 on success, 3 for numerical failures and 2 for every other error: an invalid
configuration, parameters rejected while a command runs, or an output file that cannot be written.
"""

import argparse
import logging
from collections.abc import Callable, Sequence
from pathlib import Path

import pandas as pd
from pydantic import ValidationError

from meanforce.cli.commands import cmd_coefficients, cmd_dynamics, cmd_fidelity_map, cmd_steady
from meanforce.cli.config import RunConfig, apply_overrides, load_config
from meanforce.cli.output import write_table
from meanforce.exceptions import MeanForceDomainError, MeanForceNumericalError, MeanForceValidationError
from meanforce.utils.logging import get_logger, setup_rich_logging
from meanforce.variants import Method

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3

COMMANDS: dict[str, Callable[[RunConfig], pd.DataFrame]] = {
    "coefficients": cmd_coefficients,
    "dynamics": cmd_dynamics,
    "steady": cmd_steady,
    "fidelity-map": cmd_fidelity_map,
}


def _common_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", type=Path, default=None, help="TOML configuration file.")
    parser.add_argument("--out", type=Path, default=None, help="Output CSV file; standard output if omitted.")
    parser.add_argument("--tol", type=float, default=None, help="Quadrature tolerance.")
    parser.add_argument("--t-max", type=float, default=None, help="Final time of the dynamics.")
    parser.add_argument("--n-points", type=int, default=None, help="Number of time samples.")
    parser.add_argument(
        "--omega0",
        type=float,
        default=None,
        help="Bare trap frequency ω₀. Replaces the model value; outputs are not rescaled by it.",
    )
    parser.add_argument("--counter-term", action=argparse.BooleanOptionalAction, default=None)
    parser.add_argument("--lamb-shift", action=argparse.BooleanOptionalAction, default=None)
    parser.add_argument("--secular", action=argparse.BooleanOptionalAction, default=None)
    parser.add_argument("--shifted", action=argparse.BooleanOptionalAction, default=None)
    parser.add_argument("--method", choices=[str(m) for m in Method], default=None)
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug diagnostics.")
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per table."""
    parser = argparse.ArgumentParser(
        prog="meanforce",
        description="Compare master equations with the exact dynamics of a damped quantum oscillator.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    for name, command in COMMANDS.items():
        summary = (command.__doc__ or "").splitlines()[0]
        subparsers.add_parser(name, parents=[common], help=summary, description=summary)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    args = build_parser().parse_args(argv)
    setup_rich_logging(logging.DEBUG if args.verbose else logging.WARNING)

    try:
        config = apply_overrides(load_config(args.config), args)
    except MeanForceValidationError as exc:
        logger.error("Configuration error: %s", exc)  # noqa: TRY400
        return EXIT_CONFIG_ERROR

    try:
        frame = COMMANDS[args.command](config)
    except (MeanForceNumericalError, MeanForceDomainError) as exc:
        logger.error("%s failed: %s", args.command, exc)  # noqa: TRY400
        return EXIT_NUMERICAL_FAILURE
    except (MeanForceValidationError, ValidationError) as exc:
        logger.error("%s rejected its parameters: %s", args.command, exc)  # noqa: TRY400
        return EXIT_CONFIG_ERROR

    try:
        write_table(frame, config.output.path)
    except OSError as exc:
        logger.error("Cannot write %s: %s", config.output.path, exc)  # noqa: TRY400
        return EXIT_CONFIG_ERROR
    return EXIT_OK
