#!/usr/bin/env python3
"""Run the Higgs-de Rham flow on a block state and print the step-by-step
trace with the final periodicity verdict.

Example:

    python scripts/flow_explorer.py --p 5 --curve weier:0,1 --state unif
"""

import argparse
import sys

from higgsflow.cli import _parse_mod_curve
from higgsflow.flow import decide_periodicity, format_state, parse_state


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, required=True)
    ap.add_argument("--f", type=int, default=1)
    ap.add_argument("--curve", required=True, help='"weier:a,b" or "legendre:l"')
    ap.add_argument("--state", default="unif", help='e.g. "unif", "N", "line:2,3+unif"')
    ap.add_argument("--max-steps", type=int, default=64)
    args = ap.parse_args()

    curve = _parse_mod_curve(args.p, args.f, args.curve)
    state = parse_state(curve, args.state)
    trace = decide_periodicity(state, curve, max_steps=args.max_steps)

    kind = "ordinary" if trace.ordinary else "supersingular"
    print(f"{curve!r}  ({kind})")
    for i, s in enumerate(trace.states):
        print(f"  step {i}: {format_state(s)}")
    v = trace.verdict
    if v.kind == "periodic":
        print(f"verdict: periodic with period {v.period}")
    elif v.kind == "non_periodic":
        print(f"verdict: non-periodic ({v.reason})")
    else:
        print(f"verdict: undetermined after {v.steps_exhausted} steps")
    return 0


if __name__ == "__main__":
    sys.exit(main())
