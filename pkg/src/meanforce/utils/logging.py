"""Logging utilities for the meanforce project."""

import logging

from rich.console import Console
from rich.logging import RichHandler
from rich.traceback import install as install_rich_traceback


def get_logger(name: str) -> logging.Logger:
    """Get a logger with the given name."""
    return logging.getLogger(name)


def setup_rich_logging(level: int | str = logging.INFO) -> None:
    """Configure rich logging on standard error and rich tracebacks for command-line use.

    Args:
        level: Root logging level, e.g. ``logging.DEBUG`` for ``--verbose`` runs.
    """
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)],
        force=True,
    )
    install_rich_traceback(width=200)
