"""Shared argument handling, input reading and exit codes for the commands."""

import argparse
import functools
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence, TypeVar, get_args

from cellideals.config import BudgetConfig, load_budget_config
from cellideals.formats.report import ReportFormat
from cellideals.formats.text import CollectionParseError, parse_collection
from cellideals.grid import CellCollection
from cellideals.logging import configure_logging
from cellideals.polyalg.budget import BudgetExceededError
from cellideals.radicality.library import ConfigValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_VALIDATION = 4

F = TypeVar("F", bound=Callable[..., None])


def add_common_arguments(parser: argparse.ArgumentParser, report: bool = True) -> None:
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--config", type=str, default=None, help="A YAML file with budget overrides")
    if report:
        parser.add_argument("--format", type=str, default="jsonl", choices=get_args(ReportFormat), help="Report format")


def setup(parsed_args: argparse.Namespace) -> BudgetConfig:
    """Configures logging on stderr and loads the merged budget configuration."""
    configure_logging(level=logging.DEBUG if parsed_args.debug else logging.INFO, stream=sys.stderr)
    config = load_budget_config(parsed_args.config)
    if getattr(parsed_args, "budget", None) is not None:
        config.max_seconds = parsed_args.budget
    return config


def read_collections(source: str) -> list[CellCollection]:
    """Reads one encoded collection per line from a file, or from stdin for ``-``.

    Blank lines and ``#`` comments are skipped. Input with no entries at all
    stands for the empty collection.

    Raises:
        CollectionParseError: On a malformed line
        FileNotFoundError: If the file does not exist
    """
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    collections: list[CellCollection] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            collections.append(parse_collection(line))
        except CollectionParseError as error:
            raise CollectionParseError(f"{source}:{lineno}: {error.message}", error.offset) from error
    return collections or [CellCollection()]


def exit_code(error: BaseException) -> int:
    match error:
        case ConfigValidationError():
            return EXIT_VALIDATION
        case BudgetExceededError():
            return EXIT_BUDGET
        case CollectionParseError() | FileNotFoundError() | ValueError():
            return EXIT_PARSE
        case _:
            raise error


def handle_errors(main: F) -> F:
    """Maps parse, budget and validation errors of a command onto exit codes."""

    @functools.wraps(main)
    def wrapped(args: Sequence[str] | None = None) -> None:
        try:
            main(args)
        except (ConfigValidationError, BudgetExceededError, CollectionParseError, FileNotFoundError, ValueError) as e:
            logger.error("%s", e)
            raise SystemExit(exit_code(e)) from e

    return wrapped  # type: ignore[return-value]
