#!/usr/bin/env python3
"""Scan a curve over Q across a prime range and tabulate how the
supersingular count grows, window by window.

Example:

    python scripts/supersingular_density.py --curve legendre:2 --pmax 10000
"""

import argparse
import math
import sys

from higgsflow.scan import density_summary, parse_rational_curve, scan


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--curve", default="legendre:2", help='"legendre:n/d" or "weier:a,b"')
    ap.add_argument("--pmin", type=int, default=5)
    ap.add_argument("--pmax", type=int, default=10**4)
    ap.add_argument("--windows", type=int, default=10, help="progress rows to print")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    curve = parse_rational_curve(args.curve)
    report = scan(curve, args.pmin, args.pmax, workers=args.workers)

    print(f"curve {report.curve}, primes in [{args.pmin}, {args.pmax}]")
    print(f"{'p <=':>8}  {'good':>6}  {'ss':>5}  {'ratio':>7}  {'ss/(sqrt(p)/log p)':>18}")
    cuts = [args.pmin + (args.pmax - args.pmin) * k // args.windows for k in range(1, args.windows + 1)]
    good = ss = 0
    it = iter(report.records)
    rec = next(it, None)
    for cut in cuts:
        while rec is not None and rec.p <= cut:
            if rec.status in ("ordinary", "supersingular"):
                good += 1
            if rec.status == "supersingular":
                ss += 1
            rec = next(it, None)
        norm = math.sqrt(cut) / math.log(cut)
        ratio = ss / good if good else 0.0
        print(f"{cut:>8}  {good:>6}  {ss:>5}  {ratio:>7.4f}  {ss / norm:>18.3f}")

    d = density_summary(report)
    print()
    print(f"total: {d['good']} good, {d['supersingular']} supersingular, "
          f"{d['bad']} bad, {d['skipped']} skipped")
    print(f"supersingular primes start: {list(report.supersingular_primes[:12])}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
