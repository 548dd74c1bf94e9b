#!/usr/bin/env python3
"""Doubling sweeps of both incidence-rich constructions against the bound
envelope; writes one table per construction into results/."""

import sys
from pathlib import Path

from spanflats.cli import main

RESULTS = Path(__file__).resolve().parent.parent / "results"


def run() -> int:
    RESULTS.mkdir(exist_ok=True)
    for construction in ("bichromatic", "thetamk"):
        out = RESULTS / f"envelope_{construction}.csv"
        code = main(
            ["envelope-sweep", "--construction", construction, "--d", "3",
             "--n0", "8", "--doublings", "3", "--format", "csv",
             "--out", str(out)]
        )
        print(f"wrote {out}")
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(run())
