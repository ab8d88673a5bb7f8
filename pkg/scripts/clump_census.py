#!/usr/bin/env python3
"""Clump census: verify the supersingular l-isogeny graph at every prime in
a range and print vertex/edge counts and connectivity.

Example:

    python scripts/clump_census.py --pmax 199 --l 2
"""

import argparse
import sys

from higgsflow.isogeny import verify_clump
from higgsflow.numtheory import primes_in_range


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmin", type=int, default=5)
    ap.add_argument("--pmax", type=int, default=199)
    ap.add_argument("--l", type=int, default=2, choices=(2, 3))
    args = ap.parse_args()

    print(f"{'p':>5}  {'#j':>4}  {'edges':>5}  closed  regular  connected")
    all_ok = True
    for p in primes_in_range(args.pmin, args.pmax):
        if p == args.l:
            continue
        r = verify_clump(p, args.l)
        all_ok = all_ok and r.closed and r.regular
        print(
            f"{p:>5}  {r.vertex_count:>4}  {r.edge_count:>5}  "
            f"{str(r.closed):<6}  {str(r.regular):<7}  {r.connected}"
        )
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
