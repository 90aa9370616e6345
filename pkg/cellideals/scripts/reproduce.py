"""Reproduces the reference tables and worked examples."""

import argparse
import datetime
import logging
import sys
from typing import Sequence

from cellideals.config import BudgetConfig
from cellideals.enumerate import (
    KNOWN_COUNTS,
    KNOWN_NONRADICAL_COUNTS,
    EnumerationConfig,
    census_row,
    enumerate_collections,
)
from cellideals.formats.report import ReportFormat, ReportRecord, write_records, write_table
from cellideals.grid import CellCollection
from cellideals.ideals import adjacent_minor_ideal
from cellideals.logging import LOG_STATUS, format_timedelta
from cellideals.polyalg.dump import format_polynomial
from cellideals.primes import classify, enumerate_admissible_sets, is_minimal_prime, min_admissible_height
from cellideals.radicality import ConfigLibrary, dt_family, dt_order, dt_witness, is_radical, validate_dt
from cellideals.scripts.common import add_common_arguments, handle_errors, setup

logger = logging.getLogger(__name__)

TABLES = ["census", "nonradical", "l-tromino", "l-tromino-admissible", "non-convex", "dt", "library"]
TABLE_ALIASES = {"remark26": "l-tromino", "remark38": "non-convex", "prop44": "dt"}

L_TROMINO = CellCollection.from_lower_lefts([(1, 1), (2, 1), (1, 2)])
U_PENTOMINO = CellCollection.from_lower_lefts([(1, 1), (1, 2), (2, 1), (3, 1), (3, 2)])


def nonradical_rows(rank_max: int, config: BudgetConfig) -> list[dict[str, object]]:
    rows: list[dict[str, object]] = []
    for rank in range(1, rank_max + 1):
        tally = {"radical": 0, "non-radical": 0, "unknown": 0}
        for collection in enumerate_collections(EnumerationConfig(rank, max_rank=config.max_enumeration_rank)):
            tally[is_radical(collection, "auto", config=config, on_budget="unknown").status] += 1
        rows.append(
            {
                "rank": rank,
                "total": sum(tally.values()),
                "non_radical": tally["non-radical"],
                "radical": tally["radical"],
                "unknown": tally["unknown"],
                "expected": KNOWN_NONRADICAL_COUNTS.get(rank),
            }
        )
    return rows


def admissible_rows(collection: CellCollection, config: BudgetConfig) -> list[dict[str, object]]:
    """Every admissible set with its height and whether its prime is minimal."""
    budget = config.to_budget()
    return [
        {
            "vertices": list(admissible.sorted_vertices),
            "height": admissible.height,
            "minimal": is_minimal_prime(collection, admissible.vertices, budget),
        }
        for admissible in enumerate_admissible_sets(collection)
    ]


def dt_row(t: int, config: BudgetConfig) -> dict[str, object]:
    check = validate_dt(t, config.to_budget())
    height, _ = min_admissible_height(dt_family(t))
    basis = adjacent_minor_ideal(dt_family(t)).groebner(dt_order(t), config.to_budget())
    return {
        "t": t,
        "rank": t + 4,
        "order": dt_order(t).describe(),
        "basis": [format_polynomial(p) for p in basis],
        "basis_matches": check.basis_matches,
        "witness": format_polynomial(dt_witness(t)),
        "witness_outside": check.witness_outside,
        "witness_square_inside": check.witness_square_inside,
        "deletions": check.deletions,
        "min_height": height,
        "complete_intersection": height == t + 4,
    }


def _examples(collection: CellCollection, config: BudgetConfig, fmt: ReportFormat) -> None:
    report = classify(collection, True, config.to_budget(), config.minimal_primes_max_rank)
    record = ReportRecord.for_collection(collection).with_classification(report)
    write_records([record], sys.stdout, fmt)


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Reproduce reference tables")
    table_choices = TABLES + list(TABLE_ALIASES)
    parser.add_argument("--table", type=str, required=True, choices=table_choices, help="The table to reproduce")
    parser.add_argument("--rank-max", type=int, default=None, help="Largest rank for census tables")
    parser.add_argument("--t", type=int, default=2, help="The D_t parameter for the dt table")
    parser.add_argument("--progress", action="store_true", help="Show progress bars")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    fmt = parsed_args.format
    start = datetime.datetime.now()

    table = TABLE_ALIASES.get(parsed_args.table, parsed_args.table)
    match table:
        case "census":
            rank_max = parsed_args.rank_max or 7
            row = census_row(rank_max, max_rank=config.max_enumeration_rank, progress=parsed_args.progress)
            rows = [{"rank": r, "count": n, "expected": KNOWN_COUNTS.get(r)} for r, n in row.items()]
            write_table(rows, sys.stdout, fmt)
        case "nonradical":
            write_table(nonradical_rows(parsed_args.rank_max or 5, config), sys.stdout, fmt)
        case "l-tromino":
            _examples(L_TROMINO, config, fmt)
        case "l-tromino-admissible":
            write_table(admissible_rows(L_TROMINO, config), sys.stdout, fmt)
        case "non-convex":
            _examples(U_PENTOMINO, config, fmt)
        case "dt":
            write_table([dt_row(parsed_args.t, config)], sys.stdout, fmt)
        case "library":
            rows = [
                {"name": r.name, "rank": r.rank, "non_radical": r.non_radical, "method": r.method, "ok": r.ok}
                for r in ConfigLibrary.load().validate(config)
            ]
            write_table(rows, sys.stdout, fmt)
        case _:
            raise ValueError(f"Unknown table: {table}")

    elapsed = format_timedelta(datetime.datetime.now() - start, short=True)
    logger.log(LOG_STATUS, "Reproduced %s in %s", table, elapsed)


if __name__ == "__main__":
    # python -m cellideals.scripts.reproduce
    main()
