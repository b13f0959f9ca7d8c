#!/usr/bin/env python3
"""Tabulate the extrapolated limit polynomials Q_j* against Narayana rows.

For each j, the interior coefficients of Q_{j,n} are extrapolated in
1/(n-1) from exact samples, pushed through M_{j+1}(x) = (-1)^j x Q_j*(-x),
and compared with the coefficients of N_{j+1}.

Usage: python scripts/qstar_table.py [--jmax 8] [--ns 20,40,80]
"""

import argparse

from schur_szego.narayana import narayana_number
from schur_szego.spectra import q_star_estimate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jmax", type=int, default=8)
    parser.add_argument("--ns", type=str, default="20,40,80")
    args = parser.parse_args()
    ns = tuple(int(tok) for tok in args.ns.split(","))

    print(f"extrapolation samples: n = {ns}")
    for j in range(1, args.jmax + 1):
        coeffs, bounds = q_star_estimate(j, ns)
        m = [(-1.0) ** j * (-1.0) ** i * coeffs[i] for i in range(j + 1)]
        target = [narayana_number(j + 1, k) for k in range(1, j + 2)]
        dev = max(abs(a - b) for a, b in zip(m, target))
        print(f"\nQ_{j}* ~ {['%+.6f' % c for c in coeffs]}")
        print(f"  error bounds   {['%.1e' % b for b in bounds]}")
        print(f"  M_{j + 1} coeffs   {['%+.6f' % c for c in m]}")
        print(f"  N_{j + 1} row      {target}   (max deviation {dev:.2e})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
