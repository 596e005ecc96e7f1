#!/usr/bin/env python3
"""Run the split-exact-sequence checks over a signed-exponential grid."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from skkinv.skk import default_grid, verify_split_sequence


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=4, help="exponent half-width")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    report = verify_split_sequence(grid=default_grid(args.grid), seed=args.seed)
    print(report.summary())
    sys.exit(0 if report.all_passed else 1)


if __name__ == "__main__":
    main()
