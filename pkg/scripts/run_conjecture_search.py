#!/usr/bin/env python3
"""Ratio statistics for random non-degenerate point sets in E^3;
writes results/conjecture_d3.csv."""

import sys
from pathlib import Path

from spanflats.cli import main

RESULTS = Path(__file__).resolve().parent.parent / "results"


def run() -> int:
    RESULTS.mkdir(exist_ok=True)
    out = RESULTS / "conjecture_d3.csv"
    argv = [
        "conjecture-search", "--d", "3", "--n", "8", "--samples", "100",
        "--format", "csv", "--out", str(out),
    ]
    argv += sys.argv[1:]
    code = main(argv)
    print(f"wrote {out}")
    return code


if __name__ == "__main__":
    sys.exit(run())
