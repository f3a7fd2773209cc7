#!/usr/bin/env python3
"""Regenerate the three built-in reference tables in one go.

Usage: python scripts/reproduce_tables.py [--format {table,csv}] [--outdir DIR]

With --outdir each table lands in its own file (tab1.csv etc.); otherwise
everything is printed to stdout.
"""

import argparse
import pathlib
import sys

from cornellspec.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("table", "csv"), default="table")
    parser.add_argument("--outdir", default=None)
    args = parser.parse_args()

    status = 0
    for which in ("tab1", "tab2", "tab3"):
        argv = ["table", which, "--format", args.format]
        if args.outdir:
            outdir = pathlib.Path(args.outdir)
            outdir.mkdir(parents=True, exist_ok=True)
            suffix = "csv" if args.format == "csv" else "txt"
            argv += ["--output", str(outdir / f"{which}.{suffix}")]
        else:
            print(f"== {which} ==")
        status = max(status, cli_main(argv))
        if not args.outdir:
            print()
    return status


if __name__ == "__main__":
    sys.exit(main())
