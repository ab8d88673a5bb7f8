#!/usr/bin/env python3
"""Tabulate the supersingular locus and the Eichler-Deuring mass per prime.

Example:

    python scripts/mass_table.py --pmax 199
"""

import argparse
import sys

from higgsflow.numtheory import primes_in_range
from higgsflow.sslocus import enumerate_supersingular, mass_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmin", type=int, default=5)
    ap.add_argument("--pmax", type=int, default=199)
    ap.add_argument("--show-j", action="store_true", help="list the j-invariants too")
    args = ap.parse_args()

    print(f"{'p':>5}  {'#ss':>4}  {'mass':>9}  {'(p-1)/24':>9}  pass")
    all_ok = True
    for p in primes_in_range(args.pmin, args.pmax):
        r = mass_check(p)
        all_ok = all_ok and r.passed
        print(f"{p:>5}  {r.locus_size:>4}  {str(r.mass):>9}  {str(r.expected):>9}  {r.passed}")
        if args.show_j:
            locus = enumerate_supersingular(p)
            js = ", ".join(
                f"{j}(Aut={locus.aut_orders[j]})" for j in locus.j_values
            )
            print(f"       j: {js}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
