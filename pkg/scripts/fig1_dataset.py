#!/usr/bin/env python3
"""Produce the empirical-vs-theoretical root distribution dataset.

Writes a CSV (x, empirical, theoretical) over [-1, 0] for N_n and prints
the KS summary. Equivalent to `schur-szego measure`, kept as a runnable
experiment entry point.

Usage: python scripts/fig1_dataset.py [--n 100] [--grid 512] [--out fig1.csv]
"""

import argparse

from schur_szego import cli


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--grid", type=int, default=512)
    parser.add_argument("--out", type=str, default="fig1.csv")
    args = parser.parse_args()
    return cli.main(["measure", "--n", str(args.n), "--grid", str(args.grid),
                     "--out", args.out])


if __name__ == "__main__":
    raise SystemExit(main())
