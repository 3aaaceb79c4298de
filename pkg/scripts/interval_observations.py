#!/usr/bin/env python3
"""Probe the parameter ranges where only two-sided bounds are proved.

For paths with n in the awkward residue classes mod 2k+2, and for fans with
path order divisible by 4, the known results pin the fractional truncated
dimension only to an interval of width 1/2.  This script prints the exact LP
value in each such case so the true behavior can be inspected.  Nothing here
asserts; it reports.
"""

import argparse

from truncdim import formulas, generators
from truncdim.rational import fmt
from truncdim.solvers import dim_kf


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=30)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()

    print("paths: interval cases  [lo, hi]  exact LP value")
    for k in range(1, args.max_k + 1):
        for n in range(2 * k + 4, args.max_n + 1):
            fv = formulas.path_kf(n, k)
            if fv.is_exact:
                continue
            got = dim_kf(generators.path(n), k).total
            slack = "lo" if got == fv.lo else ("hi" if got == fv.hi else "interior")
            print(
                f"  n={n:3d} k={k}  [{fmt(fv.lo)}, {fmt(fv.hi)}]  "
                f"value={fmt(got)}  ({slack})"
            )

    print("fans: interval cases (path order divisible by 4, >= 8)")
    for n in range(8, args.max_n + 1, 4):
        fv = formulas.fan_kf(n, 1)
        got = dim_kf(generators.fan(n), 1).total
        slack = "lo" if got == fv.lo else ("hi" if got == fv.hi else "interior")
        print(f"  n={n:3d}      [{fmt(fv.lo)}, {fmt(fv.hi)}]  value={fmt(got)}  ({slack})")


if __name__ == "__main__":
    main()
