"""Enumerates weakly connected collections of cells of a given rank."""

import argparse
import sys
from typing import Sequence

from cellideals.enumerate import FILTERS, EnumerationConfig, count_collections, enumerate_collections
from cellideals.formats.report import ReportRecord, write_records, write_table
from cellideals.scripts.common import add_common_arguments, handle_errors, setup


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Enumerate collections of cells")
    parser.add_argument("--rank", type=int, required=True, help="The number of cells")
    parser.add_argument(
        "--up-to-symmetry",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="One representative per class under translations, rotations and reflections",
    )
    parser.add_argument("--filter", type=str, action="append", default=[], choices=sorted(FILTERS), help="Filter")
    parser.add_argument("--count", action="store_true", help="Only print the number of collections")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    cfg = EnumerationConfig(
        rank=parsed_args.rank,
        up_to_symmetry=parsed_args.up_to_symmetry,
        filters=tuple(parsed_args.filter),
        max_rank=config.max_enumeration_rank,
    )
    if parsed_args.count:
        write_table([{"rank": cfg.rank, "count": count_collections(cfg)}], sys.stdout, parsed_args.format)
        return
    records = (ReportRecord.for_collection(c) for c in enumerate_collections(cfg))
    write_records(records, sys.stdout, parsed_args.format)


if __name__ == "__main__":
    # python -m cellideals.scripts.enumerate_shapes
    main()
