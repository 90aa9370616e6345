"""Lists the minimal primes of each input collection."""

import argparse
import sys
from typing import Sequence

from cellideals.formats.report import PrimeRecord, ReportRecord, write_records
from cellideals.polyalg.dump import dump_ideal
from cellideals.primes import minimal_primes
from cellideals.scripts.common import add_common_arguments, handle_errors, read_collections, setup


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Compute minimal primes")
    parser.add_argument("input", type=str, help="File with one encoded collection per line, or - for stdin")
    parser.add_argument("--ideals", action="store_true", help="Print the generators of every prime instead")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    budget = config.to_budget()
    collections = read_collections(parsed_args.input)

    if parsed_args.ideals:
        for collection in collections:
            for prime in minimal_primes(collection, budget, config.minimal_primes_max_rank):
                sys.stdout.write(f"# W = {list(prime.admissible.sorted_vertices)}, height {prime.height}\n")
                if prime.ideal.gens:
                    sys.stdout.write(dump_ideal(prime.ideal) + "\n")
        return

    def records():  # noqa: ANN202
        for collection in collections:
            primes = minimal_primes(collection, budget, config.minimal_primes_max_rank)
            found = [PrimeRecord(vertices=list(p.admissible.sorted_vertices), height=p.height) for p in primes]
            yield ReportRecord.for_collection(collection).model_copy(update={"primes": found})

    write_records(records(), sys.stdout, parsed_args.format)


if __name__ == "__main__":
    # python -m cellideals.scripts.minimal_primes
    main()
