"""Self-validates the library of minimally non-radical collections."""

import argparse
import sys
from typing import Sequence

from cellideals.formats.report import write_table
from cellideals.radicality import ConfigLibrary, ConfigValidationError, validate_library
from cellideals.scripts.common import add_common_arguments, handle_errors, setup


@handle_errors
def main(args: Sequence[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description="Validate the library entries")
    parser.add_argument("--dir", type=str, default=None, help="The config directory; defaults to the packaged one")
    add_common_arguments(parser)
    parsed_args = parser.parse_args(args)

    config = setup(parsed_args)
    library = ConfigLibrary.load(parsed_args.dir)
    results = validate_library(library, config)
    rows = [
        {"name": r.name, "rank": r.rank, "non_radical": r.non_radical, "method": r.method, "ok": r.ok}
        for r in results
    ]
    write_table(rows, sys.stdout, parsed_args.format)
    failed = [r.name for r in results if not r.ok]
    if failed:
        raise ConfigValidationError(f"Library entries failed validation: {failed}")


if __name__ == "__main__":
    # python -m cellideals.scripts.validate_configs
    main()
