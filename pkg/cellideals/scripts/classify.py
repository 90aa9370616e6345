"""Classifies collections: unmixedness, shape flags and radicality."""

import argparse
import sys
import time
from typing import Sequence

from cellideals.formats.report import ReportRecord, write_records
from cellideals.primes import classify
from cellideals.radicality import is_radical
from cellideals.scripts.common import add_common_arguments, handle_errors, read_collections, setup


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Classify collections of cells")
    parser.add_argument("input", type=str, help="File with one encoded collection per line, or - for stdin")
    parser.add_argument("--primes", action="store_true", help="Also list the minimal primes")
    parser.add_argument("--radical", action=argparse.BooleanOptionalAction, default=True, help="Decide radicality")
    parser.add_argument("--timing", action="store_true", help="Record the time spent per collection")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    budget = config.to_budget()

    def records():  # noqa: ANN202
        for collection in read_collections(parsed_args.input):
            start = time.perf_counter()
            report = classify(collection, parsed_args.primes, budget, config.minimal_primes_max_rank)
            record = ReportRecord.for_collection(collection).with_classification(report)
            if parsed_args.radical:
                record = record.with_verdict(is_radical(collection, "auto", config=config, on_budget="unknown"))
            if parsed_args.timing:
                record.seconds = round(time.perf_counter() - start, 3)
            yield record

    write_records(records(), sys.stdout, parsed_args.format)


if __name__ == "__main__":
    # python -m cellideals.scripts.classify
    main()
