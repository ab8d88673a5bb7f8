"""Command-line entry point.

Exit codes: 0 success, 1 a verification check failed (CI-friendly),
2 usage/validation error, 3 computational error (e.g. ambiguous order).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import __version__
from .curves import Curve
from .errors import (
    HiggsflowError,
    InvalidGenus,
    RangeTooLarge,
    UnsupportedLevel,
    UnsupportedRange,
    UsageError,
)
from .fields import make_field, parse_fq
from .flow import decide_periodicity, parse_state
from .isogeny import build_isogeny_graph, verify_clump
from .numtheory import is_prime, primes_in_range
from .reports import (
    build_envelope,
    canonical_json,
    format_fq,
    render_csv,
    render_table,
    to_jsonable,
)
from .scan import density_summary, parse_rational_curve, scan
from .selftest import run_selftest
from .sslocus import (
    enumerate_supersingular,
    hasse_witt_divisor_check,
    mass_check,
    shimura_mass,
)

_USAGE_ERRORS = (
    UsageError,
    UnsupportedRange,
    RangeTooLarge,
    UnsupportedLevel,
    InvalidGenus,
    ValueError,
)


def _common_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("json", "csv", "table"), default="json")
    sp.add_argument("--out", type=Path, default=None, help="write report to file")
    sp.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit timestamp/elapsed fields for byte-stable output",
    )
    sp.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("HIGGSFLOW_WORKERS", "1")),
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="higgsflow",
        description="Higgs-de Rham flow periodicity, supersingular scans, "
        "mass formulas, and isogeny clump checks at desk scale.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="subcommand", required=True)

    s = sub.add_parser("scan", help="reduce a curve over Q across a prime range")
    s.add_argument("--curve", required=True, help='"legendre:n/d" or "weier:a,b"')
    s.add_argument("--pmin", type=int, default=5)
    s.add_argument("--pmax", type=int, required=True)
    _common_flags(s)

    s = sub.add_parser("flow", help="run the Higgs-de Rham flow on a state")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--f", type=int, default=1, help="extension degree of the base field")
    s.add_argument("--curve", required=True, help='"weier:a,b" or "legendre:l" mod p')
    s.add_argument("--state", required=True, help='e.g. "unif", "N", "line:2,3+unif"')
    s.add_argument("--max-steps", type=int, default=64)
    _common_flags(s)

    s = sub.add_parser("ss-count", help="enumerate the supersingular locus")
    s.add_argument("--p", type=int, required=True)
    _common_flags(s)

    s = sub.add_parser("mass", help="Eichler-Deuring mass checks, or the symbolic Shimura mass")
    s.add_argument("--p", type=int, default=None)
    s.add_argument("--pmax", type=int, default=None)
    s.add_argument("--f", type=int, default=None, help="with --g: symbolic Shimura mass")
    s.add_argument("--g", type=int, default=None)
    _common_flags(s)

    s = sub.add_parser("hw", help="Deuring polynomial divisor checks")
    s.add_argument("--p", type=int, default=None)
    s.add_argument("--pmax", type=int, default=None)
    _common_flags(s)

    s = sub.add_parser("clump", help="verify the supersingular isogeny clump")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--l", type=int, required=True, choices=(2, 3))
    s.add_argument("--edges", type=Path, default=None, help="dump edge list CSV here")
    _common_flags(s)

    s = sub.add_parser("selftest", help="reduced-range invariant suite")
    _common_flags(s)
    return ap


def _parse_mod_curve(p: int, f: int, text: str) -> Curve:
    fld = make_field(p, f)
    text = text.strip()
    if text.startswith("weier:"):
        a, b = text[len("weier:") :].split(",")
        return Curve.weierstrass(fld, parse_fq(fld, a), parse_fq(fld, b))
    if text.startswith("legendre:"):
        return Curve.legendre(fld, parse_fq(fld, text[len("legendre:") :]))
    raise UsageError(f"bad mod-p curve literal {text!r}")


def _mass_primes(args) -> list[int]:
    if args.p is not None:
        if not is_prime(args.p):
            raise UsageError(f"{args.p} is not prime")
        return [args.p]
    if args.pmax is None:
        raise UsageError("one of --p / --pmax is required")
    return primes_in_range(5, args.pmax)


def _execute(args) -> tuple[str, object, int]:
    """Returns (schema name, payload, exit code)."""
    cmd = args.subcommand
    if cmd == "scan":
        curve = parse_rational_curve(args.curve)
        report = scan(curve, args.pmin, args.pmax, workers=args.workers)
        payload = to_jsonable(report)
        payload["density"] = density_summary(report)
        return "scan", payload, 0
    if cmd == "flow":
        curve = _parse_mod_curve(args.p, args.f, args.curve)
        state = parse_state(curve, args.state)
        trace = decide_periodicity(state, curve, max_steps=args.max_steps)
        return "flow", trace, 0
    if cmd == "ss-count":
        return "ss-count", enumerate_supersingular(args.p), 0
    if cmd == "mass":
        if args.f is not None or args.g is not None:
            if args.p is None or args.f is None or args.g is None:
                raise UsageError("symbolic mass needs --p, --f and --g")
            payload = shimura_mass(args.p, args.f, args.g)
            ok = payload["chi_identity_ok"] and payload["hw_degree_ok"]
            return "shimura", payload, 0 if ok else 1
        reports = [mass_check(p) for p in _mass_primes(args)]
        code = 0 if all(r.passed for r in reports) else 1
        return "mass", {"reports": reports}, code
    if cmd == "hw":
        primes = _mass_primes(args)
        reports = [hasse_witt_divisor_check(p) for p in primes]
        code = 0 if all(r["squarefree"] and r["constant_term_one"] for r in reports) else 1
        return "hw", {"reports": reports}, code
    if cmd == "clump":
        report = verify_clump(args.p, args.l)
        if args.edges is not None:
            graph = build_isogeny_graph(args.p, args.l)
            lines = ["j1,j2,multiplicity"]
            for j in graph.vertices:
                for j2, mult in graph.adjacency[j]:
                    lines.append(f"{format_fq(j)},{format_fq(j2)},{mult}")
            args.edges.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code = 0 if (report.closed and report.regular) else 1
        return "clump", {"reports": [report]}, code
    if cmd == "selftest":
        payload = run_selftest(workers=args.workers)
        return "selftest", payload, 0 if payload["passed"] else 1
    raise UsageError(f"unknown subcommand {cmd!r}")


def run(args, command_echo: str) -> int:
    start = time.monotonic()
    schema, payload, code = _execute(args)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    jsonable = to_jsonable(payload)
    if args.format == "json":
        env = build_envelope(
            command_echo,
            jsonable,
            elapsed_ms,
            version=__version__,
            with_timestamp=not args.no_timestamp,
        )
        text = canonical_json(env)
    elif args.format == "csv":
        text = render_csv(schema, jsonable)
    else:
        text = render_table(schema, jsonable)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def _command_echo(argv: list[str]) -> str:
    """The command line for the report envelope, minus the worker count:
    parallelism is an execution detail and must not perturb the output."""
    kept = []
    skip = False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok == "--workers":
            skip = True
            continue
        if tok.startswith("--workers="):
            continue
        kept.append(tok)
    return " ".join(["higgsflow", *kept])


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return run(args, _command_echo(argv))
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HiggsflowError as e:
        print(f"computation failed: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
