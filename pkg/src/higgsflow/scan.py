"""Spreading-out and reduction: curves over Q reduced modulo prime ranges,
with good/bad and ordinary/supersingular classification per prime."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .curves import Curve, count_points
from .errors import RangeTooLarge, SmallCharacteristic, UnsupportedRange
from .fields import make_field
from .numtheory import factorize, primes_in_range

SCAN_CAP = 10**7


@dataclass(frozen=True)
class BadReduction:
    p: int
    reason: str  # "nonintegral" | "singular" | "degenerate"


@dataclass(frozen=True)
class RationalCurve:
    """y^2 = x^3 + Ax + B or the Legendre curve y^2 = x(x-1)(x-t), over Q."""

    kind: str  # "weierstrass" | "legendre"
    A: Fraction | None = None
    B: Fraction | None = None
    t: Fraction | None = None
    bad_primes: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if self.kind == "weierstrass":
            disc = 4 * self.A**3 + 27 * self.B**2
            if disc == 0:
                raise ValueError("singular curve over Q")
            bad = set(factorize(self.A.denominator))
            bad |= set(factorize(self.B.denominator))
            bad |= set(factorize(abs(disc.numerator)))
        elif self.kind == "legendre":
            t = self.t
            if t == 0 or t == 1:
                raise ValueError("Legendre parameter in {0, 1}")
            bad = set(factorize(t.denominator))
            bad |= set(factorize(abs(t.numerator)))
            bad |= set(factorize(abs((t - 1).numerator)))
        else:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        bad.discard(1)
        object.__setattr__(self, "bad_primes", frozenset(bad))

    def describe(self) -> str:
        def frac(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        if self.kind == "legendre":
            return f"legendre:{frac(self.t)}"
        return f"weier:{frac(self.A)},{frac(self.B)}"


def parse_rational_curve(text: str) -> RationalCurve:
    """CLI curve literals: "legendre:n/d" or "weier:a_n/a_d,b_n/b_d"."""
    text = text.strip()
    if text.startswith("legendre:"):
        return RationalCurve("legendre", t=Fraction(text[len("legendre:") :]))
    if text.startswith("weier:"):
        a, b = text[len("weier:") :].split(",")
        return RationalCurve("weierstrass", A=Fraction(a), B=Fraction(b))
    raise ValueError(f"bad curve literal {text!r}")


def reduce_mod_p(curve: RationalCurve, p: int) -> Curve | BadReduction:
    """Reduction mod p >= 5: the reduced curve when p-integral and
    nondegenerate, else a BadReduction marker."""
    if p < 5:
        raise SmallCharacteristic(f"p={p} < 5")
    fld = make_field(p)

    def red(x: Fraction):
        if x.denominator % p == 0:
            return None
        return fld.el(x.numerator % p) * fld.el(x.denominator % p).inverse()

    if curve.kind == "legendre":
        lam = red(curve.t)
        if lam is None:
            return BadReduction(p, "nonintegral")
        if lam.is_zero() or lam == fld.one():
            return BadReduction(p, "degenerate")
        return Curve.legendre(fld, lam)
    A = red(curve.A)
    B = red(curve.B)
    if A is None or B is None:
        return BadReduction(p, "nonintegral")
    disc = fld.el(4) * A**3 + fld.el(27) * B * B
    if disc.is_zero():
        return BadReduction(p, "singular")
    return Curve.weierstrass(fld, A, B)


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    status: str  # "skipped" | "bad" | "ordinary" | "supersingular"
    a: int | None = None
    reason: str | None = None


@dataclass(frozen=True)
class ScanReport:
    curve: str
    p_min: int
    p_max: int
    records: tuple[PrimeRecord, ...]
    totals: dict
    supersingular_primes: tuple[int, ...]


def _classify_prime(curve: RationalCurve, p: int) -> PrimeRecord:
    if p < 5:
        return PrimeRecord(p, "skipped", reason="characteristic < 5 unsupported")
    reduced = reduce_mod_p(curve, p)
    if isinstance(reduced, BadReduction):
        return PrimeRecord(p, "bad", reason=reduced.reason)
    _, a = count_points(reduced)
    status = "supersingular" if a % p == 0 else "ordinary"
    return PrimeRecord(p, status, a=a)


def _scan_chunk(curve: RationalCurve, primes: list[int]) -> list[PrimeRecord]:
    return [_classify_prime(curve, p) for p in primes]


def scan(
    curve: RationalCurve, p_min: int, p_max: int, workers: int = 1
) -> ScanReport:
    """Classify every prime in [p_min, p_max]; deterministic sorted output
    independent of worker count."""
    if p_min < 2 or p_min > p_max:
        raise UnsupportedRange(f"bad range [{p_min}, {p_max}]")
    if p_max > SCAN_CAP:
        raise RangeTooLarge(f"p_max > {SCAN_CAP}")
    primes = primes_in_range(p_min, p_max)
    if workers <= 1 or len(primes) < 64:
        records = _scan_chunk(curve, primes)
    else:
        chunk = max(32, len(primes) // (4 * workers))
        chunks = [primes[i : i + chunk] for i in range(0, len(primes), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_chunk, [curve] * len(chunks), chunks)
        records = [r for part in parts for r in part]
    records.sort(key=lambda r: r.p)
    totals = {"skipped": 0, "bad": 0, "ordinary": 0, "supersingular": 0, "good": 0}
    for r in records:
        totals[r.status] += 1
    totals["good"] = totals["ordinary"] + totals["supersingular"]
    ss = tuple(r.p for r in records if r.status == "supersingular")
    return ScanReport(
        curve=curve.describe(),
        p_min=p_min,
        p_max=p_max,
        records=tuple(records),
        totals=totals,
        supersingular_primes=ss,
    )


def density_summary(report: ScanReport) -> dict:
    """Counts plus heuristic normalizations; no theoretical claim intended."""
    good = report.totals["good"]
    ss = report.totals["supersingular"]
    norm = math.sqrt(report.p_max) / math.log(report.p_max)
    return {
        "curve": report.curve,
        "p_min": report.p_min,
        "p_max": report.p_max,
        "primes_seen": len(report.records),
        "good": good,
        "bad": report.totals["bad"],
        "skipped": report.totals["skipped"],
        "supersingular": ss,
        "ordinary": report.totals["ordinary"],
        "ratio_supersingular_to_good": (ss / good) if good else 0.0,
        "normalized_count": ss / norm,
    }
