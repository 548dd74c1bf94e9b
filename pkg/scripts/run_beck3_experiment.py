#!/usr/bin/env python3
"""Planted spanned-plane growth experiment over the full grid
(n in {20,30,40}, k in {3,5,7}, 5 seeds); writes results/beck3.csv.

Pass --jobs N to fan rows out over processes.
"""

import sys
from pathlib import Path

from spanflats.cli import main

RESULTS = Path(__file__).resolve().parent.parent / "results"


def run() -> int:
    RESULTS.mkdir(exist_ok=True)
    out = RESULTS / "beck3.csv"
    argv = [
        "beck3", "--n-list", "20,30,40", "--k-list", "3,5,7", "--seeds", "5",
        "--plant", "plane", "--format", "csv", "--out", str(out),
    ]
    argv += sys.argv[1:]
    code = main(argv)
    print(f"wrote {out}")
    return code


if __name__ == "__main__":
    sys.exit(run())
