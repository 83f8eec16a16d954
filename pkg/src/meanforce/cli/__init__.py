"""Command-line front end."""

from meanforce.cli.commands import cmd_coefficients, cmd_dynamics, cmd_fidelity_map, cmd_steady
from meanforce.cli.config import RunConfig, load_config
from meanforce.cli.main import main

__all__ = [
    "RunConfig",
    "cmd_coefficients",
    "cmd_dynamics",
    "cmd_fidelity_map",
    "cmd_steady",
    "load_config",
    "main",
]
