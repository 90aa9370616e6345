"""Prints the reduced Groebner basis of an adjacent 2-minor ideal."""

import argparse
import sys
from typing import Sequence

from cellideals.ideals import adjacent_minor_ideal
from cellideals.polyalg.dump import dump_ideal
from cellideals.polyalg.orders import parse_order_spec
from cellideals.radicality.family import dt_family, dt_label_names
from cellideals.scripts.common import add_common_arguments, handle_errors, read_collections, setup


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Compute a reduced Groebner basis")
    parser.add_argument("input", type=str, nargs="?", default=None, help="File with encoded collections, or -")
    parser.add_argument("--order", type=str, required=True, help="Order spec, e.g. 'lex:1,1>2,1>...'")
    parser.add_argument("--dt", type=int, default=None, help="Use D_t and its symbolic vertex labels")
    add_common_arguments(parser, report=False)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    if parsed_args.dt is not None:
        collections, labels = [dt_family(parsed_args.dt)], dt_label_names(parsed_args.dt)
    elif parsed_args.input is not None:
        collections, labels = read_collections(parsed_args.input), None
    else:
        raise ValueError("Either an input file or --dt is required")

    for collection in collections:
        ideal = adjacent_minor_ideal(collection)
        if ideal.is_zero:
            sys.stdout.write("0\n")
            continue
        order = parse_order_spec(parsed_args.order, ideal.context, labels)
        basis = ideal.groebner(order, config.to_budget())
        sys.stdout.write(f"# {order.describe()}\n{dump_ideal(basis)}\n")


if __name__ == "__main__":
    # python -m cellideals.scripts.groebner
    main()
