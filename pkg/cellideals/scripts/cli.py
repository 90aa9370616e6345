"""Defines the top-level cellideals CLI."""

import argparse
from typing import Sequence

from cellideals.scripts import (
    classify,
    discover,
    enumerate_shapes,
    groebner,
    minimal_primes,
    radical,
    reproduce,
    validate_configs,
)


def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Adjacent 2-minor ideals of collections of cells", add_help=False)
    parser.add_argument(
        "subcommand",
        choices=[
            "enumerate",
            "classify",
            "minimal-primes",
            "radical",
            "groebner",
            "reproduce",
            "validate-configs",
            "discover",
        ],
        help="The subcommand to run",
    )
    parsed_args, remaining_args = parser.parse_known_args(args)

    match parsed_args.subcommand:
        case "enumerate":
            enumerate_shapes.main(remaining_args)
        case "classify":
            classify.main(remaining_args)
        case "minimal-primes":
            minimal_primes.main(remaining_args)
        case "radical":
            radical.main(remaining_args)
        case "groebner":
            groebner.main(remaining_args)
        case "reproduce":
            reproduce.main(remaining_args)
        case "validate-configs":
            validate_configs.main(remaining_args)
        case "discover":
            discover.main(remaining_args)
        case _:
            raise ValueError(f"Unknown subcommand: {parsed_args.subcommand}")


if __name__ == "__main__":
    # python -m cellideals.scripts.cli
    main()
