"""Reduced-range smoke suite behind the `selftest` CLI subcommand.

Runs the module invariant checks at p <= 61 with fixed seeds, in a few
seconds; output is deterministic for a given version and worker count."""

from __future__ import annotations

import random
from fractions import Fraction

from .batch import dichotomy_sweep
from .curves import Curve, point_order, random_point
from .fields import make_field
from .flow import HiggsState, LineBlock, UnifBlock, decide_periodicity
from .isogeny import verify_clump
from .numtheory import primes_in_range
from .polys import Poly, roots_in_fq
from .scan import parse_rational_curve, scan
from .sslocus import hasse_witt_divisor_check, mass_check

SELFTEST_PRIMES = primes_in_range(5, 61)


def _check_field_axioms() -> tuple[bool, str]:
    rng = random.Random(101)
    for fld in (make_field(61), make_field(7, 2)):
        for _ in range(200):
            a, b, c = (
                fld.from_coeffs([rng.randrange(fld.p) for _ in range(fld.f)])
                for _ in range(3)
            )
            if (a + b) + c != a + (b + c):
                return False, "associativity failed"
            if a * (b + c) != a * b + a * c:
                return False, "distributivity failed"
            if not a.is_zero() and a * a.inverse() != fld.one():
                return False, "inverse failed"
    return True, "2 fields x 200 samples"


def _check_frobenius() -> tuple[bool, str]:
    rng = random.Random(102)
    for fld in (make_field(5, 2), make_field(11, 2)):
        for _ in range(50):
            x = fld.from_coeffs([rng.randrange(fld.p) for _ in range(fld.f)])
            if x**fld.q != x:
                return False, f"x^q != x in F_{fld.p}^2"
    return True, "q-power fixes F_q"


def _check_roots_oracle() -> tuple[bool, str]:
    rng = random.Random(103)
    for fld in (make_field(31), make_field(5, 2)):
        for _ in range(25):
            deg = rng.randrange(1, 5)
            coeffs = [
                fld.from_coeffs([rng.randrange(fld.p) for _ in range(fld.f)])
                for _ in range(deg)
            ] + [fld.one()]
            pol = Poly(fld, coeffs)
            if roots_in_fq(pol) != roots_in_fq(pol, exhaustive=True):
                return False, "root finder disagrees with exhaustive evaluation"
    return True, "50 random polynomials"


def _check_dichotomy() -> tuple[bool, str]:
    for p in SELFTEST_PRIMES:
        if dichotomy_sweep(p)["mismatches"]:
            return False, f"oracle mismatch at p={p}"
    return True, f"all curves over F_p, p <= {SELFTEST_PRIMES[-1]}"


def _check_mass() -> tuple[bool, str]:
    for p in SELFTEST_PRIMES:
        r = mass_check(p)
        if not r.passed:
            return False, f"mass {r.mass} != {r.expected} at p={p}"
    return True, "mass = (p-1)/24 exactly"


def _check_hw() -> tuple[bool, str]:
    for p in SELFTEST_PRIMES:
        r = hasse_witt_divisor_check(p)
        if not (r["squarefree"] and r["degree"] == (p - 1) // 2 and r["constant_term_one"]):
            return False, f"divisor check failed at p={p}"
    return True, "H_p squarefree, degree (p-1)/2"


def _check_flow_unif() -> tuple[bool, str]:
    rng = random.Random(104)
    for p in SELFTEST_PRIMES:
        fld = make_field(p)
        count = 0
        while count < 20:
            try:
                E = Curve.weierstrass(fld, fld.el(rng.randrange(p)), fld.el(rng.randrange(p)))
            except ValueError:
                continue
            count += 1
            trace = decide_periodicity(HiggsState([UnifBlock()]), E)
            ss = E.is_supersingular()
            ok = (
                trace.verdict.kind == "non_periodic"
                and trace.verdict.reason == "supersingular_degeneration"
                if ss
                else trace.verdict.kind == "periodic" and trace.verdict.period == 1
            )
            if not ok:
                return False, f"flow verdict disagrees with oracle at p={p}"
    return True, "20 curves per prime"


def _check_line_flow() -> tuple[bool, str]:
    rng = random.Random(105)
    cases = 0
    while cases < 50:
        p = SELFTEST_PRIMES[rng.randrange(len(SELFTEST_PRIMES))]
        fld = make_field(p)
        try:
            E = Curve.weierstrass(fld, fld.el(rng.randrange(p)), fld.el(rng.randrange(p)))
        except ValueError:
            continue
        P = random_point(E, rng)
        cases += 1
        trace = decide_periodicity(HiggsState([LineBlock(P)]), E, max_steps=4)
        n = point_order(P)
        Q = P
        brute = None
        for m in range(1, n + 1):
            Q = Q.scalar_mul(p)
            if Q == P:
                brute = m
                break
        if trace.verdict.kind == "periodic":
            if brute != trace.verdict.period:
                return False, f"period mismatch at p={p}"
        else:
            if brute is not None or n % p != 0:
                return False, f"p-torsion verdict wrong at p={p}"
    return True, "analytic period = brute force on 50 samples"


def _check_clump() -> tuple[bool, str]:
    for p in SELFTEST_PRIMES:
        for l in (2, 3):
            if p == l:
                continue
            r = verify_clump(p, l)
            if not (r.closed and r.regular):
                return False, f"clump check failed at p={p}, l={l}"
    return True, "closed and (l+1)-regular"


def _make_cm_check(workers: int):
    def _check() -> tuple[bool, str]:
        report = scan(parse_rational_curve("legendre:2"), 5, 300, workers=workers)
        expected = tuple(p for p in primes_in_range(5, 300) if p % 4 == 3)
        if report.supersingular_primes != expected:
            return False, "CM law p = 3 mod 4 violated"
        return True, "legendre t=2 on [5,300]"

    return _check


def run_selftest(workers: int = 1) -> dict:
    checks = [
        ("field_axioms", _check_field_axioms),
        ("frobenius_fixes_fq", _check_frobenius),
        ("root_finder_vs_exhaustive", _check_roots_oracle),
        ("supersingularity_oracle_agreement", _check_dichotomy),
        ("eichler_deuring_mass", _check_mass),
        ("deuring_divisor_multiplicity_free", _check_hw),
        ("uniformizing_flow_dichotomy", _check_flow_unif),
        ("line_bundle_flow_periods", _check_line_flow),
        ("supersingular_clump", _check_clump),
        ("cm_scan_law", _make_cm_check(workers)),
    ]
    results = []
    for name, fn in checks:
        ok, details = fn()
        results.append({"name": name, "pass": ok, "details": details})
    return {"checks": results, "passed": all(c["pass"] for c in results)}
