"""Decides radicality of each input collection."""

import argparse
import sys
from typing import Sequence

from cellideals.formats.report import ReportRecord, write_records
from cellideals.radicality import METHODS, ConfigLibrary, is_radical
from cellideals.scripts.common import add_common_arguments, handle_errors, read_collections, setup


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Decide radicality of the adjacent 2-minor ideal")
    parser.add_argument("input", type=str, help="File with one encoded collection per line, or - for stdin")
    parser.add_argument("--method", type=str, default="auto", choices=METHODS, help="The decision method")
    parser.add_argument("--budget", type=float, default=None, help="Wall-clock seconds per Groebner run")
    parser.add_argument("--library", type=str, default=None, help="A directory of library entries for the screen")
    parser.add_argument("--allow-rank6", action="store_true", help="Allow the exact method on rank 6")
    parser.add_argument("--on-budget", type=str, default="raise", choices=["raise", "unknown"], help="Budget policy")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    if parsed_args.allow_rank6:
        config.allow_exact_rank6 = True
    library = None if parsed_args.library is None else ConfigLibrary.load(parsed_args.library)

    def records():  # noqa: ANN202
        for collection in read_collections(parsed_args.input):
            verdict = is_radical(collection, parsed_args.method, library, config, parsed_args.on_budget)
            yield ReportRecord.for_collection(collection).with_verdict(verdict)

    write_records(records(), sys.stdout, parsed_args.format)


if __name__ == "__main__":
    # python -m cellideals.scripts.radical
    main()
