"""Scans a rank for minimally non-radical collections."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from cellideals.formats.report import ReportRecord, write_records
from cellideals.logging import LOG_STATUS
from cellideals.radicality import ConfigLibrary, discover_minimally_non_radical
from cellideals.radicality.library import default_library, format_entries
from cellideals.scripts.common import add_common_arguments, handle_errors, setup

logger = logging.getLogger(__name__)


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Discover minimally non-radical collections")
    parser.add_argument("--rank", type=int, required=True, help="The number of cells")
    parser.add_argument("--library", type=str, default=None, help="A directory of library entries for the screen")
    parser.add_argument("--allow-rank6", action="store_true", help="Allow the exact method on rank 6")
    parser.add_argument("--progress", action="store_true", help="Show a progress bar")
    parser.add_argument("--write", type=str, default=None, help="Also write new shapes as a library rank file")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    if parsed_args.allow_rank6:
        config.allow_exact_rank6 = True
    library = None if parsed_args.library is None else ConfigLibrary.load(parsed_args.library)
    found = discover_minimally_non_radical(parsed_args.rank, config, library, parsed_args.progress)
    write_records((ReportRecord.for_collection(c) for c in found), sys.stdout, parsed_args.format)

    if parsed_args.write is not None:
        known = default_library() if library is None else library
        path = Path(parsed_args.write)
        path.write_text(format_entries(found, parsed_args.rank, known), encoding="utf-8")
        logger.log(LOG_STATUS, "Wrote rank %d entries to %s", parsed_args.rank, path)


if __name__ == "__main__":
    # python -m cellideals.scripts.discover
    main()
