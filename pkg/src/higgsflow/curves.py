"""Elliptic curves over F_q: group law, point counting, supersingularity.

Two independent supersingularity oracles are provided: the trace of
Frobenius (exhaustive count or BSGS) and the Hasse invariant (coefficient of
x^(p-1) in (x^3+Ax+B)^((p-1)/2)).
"""

from __future__ import annotations

import functools
import math
import random

import numpy as np

from .errors import (
    AmbiguousOrder,
    CurveMismatch,
    SmallCharacteristic,
)
from .fields import FieldDescriptor, FqElement, make_field, sqrt_opt
from .numtheory import factorize

EXHAUSTIVE_CAP = 2**20
_BSGS_SAMPLES = 16


class Curve:
    """Short-Weierstrass or Legendre elliptic curve over F_q, q = p^f, p >= 5.

    The group order and Frobenius trace are computed on demand and then
    frozen; all other attributes are immutable.
    """

    __slots__ = ("field", "kind", "A", "B", "lam", "_order", "_trace")

    def __init__(self, field: FieldDescriptor, kind: str, *, A=None, B=None, lam=None):
        if field.p < 5:
            raise SmallCharacteristic(f"p={field.p} < 5")
        self.field = field
        self.kind = kind
        self._order = None
        self._trace = None
        if kind == "weierstrass":
            self.A, self.B, self.lam = A, B, None
            disc = field.el(4) * A**3 + field.el(27) * B**2
            if disc.is_zero():
                raise ValueError("singular curve: 4A^3 + 27B^2 = 0")
        elif kind == "legendre":
            if lam.is_zero() or lam == field.one():
                raise ValueError("Legendre parameter in {0, 1}")
            self.A, self.B, self.lam = None, None, lam
        else:
            raise ValueError(f"unknown curve kind {kind!r}")

    @classmethod
    def weierstrass(cls, field: FieldDescriptor, A: FqElement, B: FqElement) -> "Curve":
        return cls(field, "weierstrass", A=A, B=B)

    @classmethod
    def legendre(cls, field: FieldDescriptor, lam: FqElement) -> "Curve":
        return cls(field, "legendre", lam=lam)

    # -- models --------------------------------------------------------------

    def long_coefficients(self) -> tuple[FqElement, FqElement, FqElement]:
        """(a2, a4, a6) for the model y^2 = x^3 + a2 x^2 + a4 x + a6."""
        fld = self.field
        if self.kind == "weierstrass":
            return fld.zero(), self.A, self.B
        lam = self.lam
        return -(fld.one() + lam), lam, fld.zero()

    def to_weierstrass(self) -> "Curve":
        """Depressed short-Weierstrass model (lossless for p >= 5)."""
        if self.kind == "weierstrass":
            return self
        fld = self.field
        a2, a4, a6 = self.long_coefficients()
        inv3 = fld.el(3).inverse()
        A = a4 - a2 * a2 * inv3
        B = fld.el(2) * a2**3 * fld.el(27).inverse() - a4 * a2 * inv3 + a6
        return Curve.weierstrass(fld, A, B)

    def j_invariant(self) -> FqElement:
        fld = self.field
        if self.kind == "legendre":
            lam = self.lam
            num = fld.el(256) * (lam * lam - lam + fld.one()) ** 3
            den = lam * lam * (lam - fld.one()) ** 2
            return num * den.inverse()
        A, B = self.A, self.B
        d4 = fld.el(4) * A**3
        return fld.el(1728) * d4 * (d4 + fld.el(27) * B * B).inverse()

    # -- counted order -------------------------------------------------------

    @property
    def order(self) -> int:
        if self._order is None:
            count_points(self)
        return self._order

    @property
    def trace(self) -> int:
        if self._trace is None:
            count_points(self)
        return self._trace

    def is_supersingular(self) -> bool:
        """Trace criterion over F_p; Hasse coefficient criterion for f > 1."""
        if self.field.f == 1:
            return is_supersingular_trace(self)
        return hasse_invariant(self).is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Curve)
            and self.field == other.field
            and self.kind == other.kind
            and (self.A, self.B, self.lam) == (other.A, other.B, other.lam)
        )

    def __hash__(self):
        return hash((self.field, self.kind, self.A, self.B, self.lam))

    def __repr__(self):
        if self.kind == "weierstrass":
            return f"Curve(y^2 = x^3 + ({self.A})x + ({self.B}) / F_{self.field.p}^{self.field.f})"
        return f"Curve(Legendre lambda={self.lam} / F_{self.field.p}^{self.field.f})"


class Point:
    """Affine point or the point at infinity (x = y = None)."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: Curve, x: FqElement | None, y: FqElement | None):
        self.curve = curve
        self.x = x
        self.y = y
        if x is not None:
            a2, a4, a6 = curve.long_coefficients()
            lhs = y * y
            rhs = ((x + a2) * x + a4) * x + a6
            if lhs != rhs:
                raise ValueError("point not on curve")

    @classmethod
    def infinity(cls, curve: Curve) -> "Point":
        return cls(curve, None, None)

    def is_infinity(self) -> bool:
        return self.x is None

    def _same(self, other: "Point"):
        if self.curve != other.curve:
            raise CurveMismatch("points on different curves")

    def __neg__(self):
        if self.is_infinity():
            return self
        return Point(self.curve, self.x, -self.y)

    def __add__(self, other: "Point") -> "Point":
        self._same(other)
        if self.is_infinity():
            return other
        if other.is_infinity():
            return self
        fld = self.curve.field
        a2, a4, _ = self.curve.long_coefficients()
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if x1 == x2:
            if y1 != y2 or y1.is_zero():
                return Point.infinity(self.curve)
            num = fld.el(3) * x1 * x1 + fld.el(2) * a2 * x1 + a4
            s = num * (fld.el(2) * y1).inverse()
        else:
            s = (y2 - y1) * (x2 - x1).inverse()
        x3 = s * s - a2 - x1 - x2
        y3 = s * (x1 - x3) - y1
        return Point(self.curve, x3, y3)

    def __sub__(self, other):
        return self + (-other)

    def scalar_mul(self, n: int) -> "Point":
        if n < 0:
            return (-self).scalar_mul(-n)
        result = Point.infinity(self.curve)
        base = self
        while n:
            if n & 1:
                result = result + base
            base = base + base
            n >>= 1
        return result

    def __rmul__(self, n: int) -> "Point":
        return self.scalar_mul(n)

    def __eq__(self, other):
        return (
            isinstance(other, Point)
            and self.curve == other.curve
            and (self.x, self.y) == (other.x, other.y)
        )

    def __hash__(self):
        return hash((self.curve, self.x, self.y))

    def __repr__(self):
        if self.is_infinity():
            return "Point(inf)"
        return f"Point({self.x}, {self.y})"


# ---------------------------------------------------------------------------
# Hasse invariant


@functools.lru_cache(maxsize=None)
def hasse_terms(p: int) -> tuple[tuple[int, int, int], ...]:
    """Terms (c, jA, kB) with the coefficient of x^(p-1) in
    (x^3 + A x + B)^((p-1)/2) equal to sum c * A^jA * B^kB."""
    m = (p - 1) // 2
    out = []
    for i in range((m + 1) // 2, 2 * m // 3 + 1):
        j = 2 * m - 3 * i
        k = 2 * i - m
        c = math.comb(m, i) * math.comb(m - i, j) % p
        if c:
            out.append((c, j, k))
    return tuple(out)


def hasse_invariant(curve: Curve) -> FqElement:
    """Coefficient of x^(p-1) in (x^3+Ax+B)^((p-1)/2); zero iff supersingular.
    Legendre curves are converted to their short-Weierstrass model first."""
    w = curve.to_weierstrass()
    fld = w.field
    A, B = w.A, w.B
    acc = fld.zero()
    for c, j, k in hasse_terms(fld.p):
        term = fld.el(c)
        if j:
            term = term * A**j
        if k:
            term = term * B**k
        acc = acc + term
    return acc


def is_supersingular_trace(curve: Curve) -> bool:
    """True iff p divides the Frobenius trace over the curve's own field."""
    return curve.trace % curve.field.p == 0


# ---------------------------------------------------------------------------
# point counting

_fp_tables: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _fp_count_tables(p: int):
    tabs = _fp_tables.get(p)
    if tabs is None:
        x = np.arange(p, dtype=np.int64)
        x3 = (x * x % p) * x % p
        chi = np.full(p, -1, dtype=np.int64)
        chi[x * x % p] = 1
        chi[0] = 0
        tabs = (x, x3, chi)
        if len(_fp_tables) > 64:
            _fp_tables.clear()
        _fp_tables[p] = tabs
    return tabs


def trace_fp(p: int, a4: int, a6: int) -> int:
    """Frobenius trace of y^2 = x^3 + a4 x + a6 over F_p by full enumeration."""
    x, x3, chi = _fp_count_tables(p)
    rhs = (x3 + a4 * x + a6) % p
    return int(-chi[rhs].sum())


def count_points(curve: Curve, method: str = "auto") -> tuple[int, int]:
    """Exact (#E(F_q), trace). Exhaustive for q <= 2^20, BSGS above."""
    if curve._order is not None and method == "auto":
        return curve._order, curve._trace
    q = curve.field.q
    if method == "exhaustive" or (method == "auto" and q <= EXHAUSTIVE_CAP):
        n = _count_exhaustive(curve)
    elif method in ("auto", "bsgs"):
        n = _count_bsgs(curve)
    else:
        raise ValueError(f"unknown counting method {method!r}")
    a = q + 1 - n
    assert a * a <= 4 * q, "Hasse bound violated"
    if curve._order is None:
        curve._order = n
        curve._trace = a
    return n, a


def _count_exhaustive(curve: Curve) -> int:
    fld = curve.field
    if fld.f == 1:
        a2, a4, a6 = curve.long_coefficients()
        p = fld.p
        x, x3, chi = _fp_count_tables(p)
        rhs = (x3 + a2.coeffs[0] * (x * x % p) + a4.coeffs[0] * x + a6.coeffs[0]) % p
        return p + 1 + int(chi[rhs].sum())
    a2, a4, a6 = curve.long_coefficients()
    squares = set()
    for z in fld.elements():
        squares.add((z * z).coeffs)
    n = 1
    for x in fld.elements():
        rhs = ((x + a2) * x + a4) * x + a6
        if rhs.is_zero():
            n += 1
        elif rhs.coeffs in squares:
            n += 2
    return n


def random_point(curve: Curve, rng: random.Random) -> Point:
    fld = curve.field
    a2, a4, a6 = curve.long_coefficients()
    while True:
        x = fld.from_coeffs([rng.randrange(fld.p) for _ in range(fld.f)])
        rhs = ((x + a2) * x + a4) * x + a6
        y = sqrt_opt(rhs)
        if y is not None:
            y = min(y, -y, key=lambda e: e.sort_key())
            return Point(curve, x, y)


def _annihilators(P: Point, lo: int, hi: int) -> set[int]:
    """All n in [lo, hi] with n*P = infinity, by baby-step giant-step."""
    if P.is_infinity():
        return set(range(lo, hi + 1))
    width = hi - lo + 1
    m = math.isqrt(width) + 1
    baby: dict[tuple, list[int]] = {}
    Q = Point.infinity(P.curve)
    for j in range(m):
        key = (None, None) if Q.is_infinity() else (Q.x.coeffs, Q.y.coeffs)
        baby.setdefault(key, []).append(j)
        Q = Q + P
    G = P.scalar_mul(m)
    R = P.scalar_mul(lo)
    out = set()
    i = 0
    while lo + i * m <= hi:
        # n*P = O  <=>  R + j*P = O  <=>  -R = j*P
        negR = -R
        key = (None, None) if negR.is_infinity() else (negR.x.coeffs, negR.y.coeffs)
        for j in baby.get(key, ()):
            n = lo + i * m + j
            if lo <= n <= hi:
                out.add(n)
        R = R + G
        i += 1
    return out


def _nonresidue(fld: FieldDescriptor) -> FqElement:
    from .fields import quadratic_character

    for cand in fld.elements():
        if quadratic_character(cand) == -1:
            return cand
    raise RuntimeError("no quadratic non-residue found")


def quadratic_twist(curve: Curve) -> Curve:
    """The quadratic twist by the canonical non-residue (trace negates)."""
    w = curve.to_weierstrass()
    d = _nonresidue(w.field)
    return Curve.weierstrass(w.field, w.A * d * d, w.B * d**3)


def _candidate_orders(curve: Curve, rng: random.Random, samples: int) -> set[int]:
    q = curve.field.q
    t0 = math.isqrt(4 * q)
    lo, hi = q + 1 - t0, q + 1 + t0
    cands: set[int] | None = None
    for _ in range(samples):
        P = random_point(curve, rng)
        ann = _annihilators(P, lo, hi)
        cands = ann if cands is None else (cands & ann)
        if len(cands) == 1:
            break
    assert cands
    return cands


def _count_bsgs(curve: Curve) -> int:
    w = curve.to_weierstrass()
    fld = w.field
    seed = (fld.p, fld.f) + w.A.coeffs + w.B.coeffs
    rng = random.Random(repr(seed))
    cands = _candidate_orders(w, rng, _BSGS_SAMPLES)
    if len(cands) == 1:
        return next(iter(cands))
    # disambiguate via the quadratic twist: orders sum to 2q + 2
    twist = quadratic_twist(w)
    tw_cands = _candidate_orders(twist, rng, _BSGS_SAMPLES)
    total = 2 * fld.q + 2
    joint = {n for n in cands if total - n in tw_cands}
    if len(joint) == 1:
        return next(iter(joint))
    raise AmbiguousOrder(
        f"group order ambiguous after {_BSGS_SAMPLES} samples: {sorted(joint)}"
    )


# ---------------------------------------------------------------------------
# isomorphism classes


def curve_from_j(j: FqElement) -> Curve:
    """Standard representative with the requested j-invariant."""
    fld = j.field
    if fld.p < 5:
        raise SmallCharacteristic(f"p={fld.p} < 5")
    if j.is_zero():
        return Curve.weierstrass(fld, fld.zero(), fld.one())
    if j == fld.el(1728):
        return Curve.weierstrass(fld, fld.one(), fld.zero())
    k = fld.el(1728) - j
    return Curve.weierstrass(fld, fld.el(3) * j * k, fld.el(2) * j * k * k)


def automorphism_order(curve: Curve) -> int:
    """#Aut over the algebraic closure: 6 at j=0, 4 at j=1728, else 2 (p >= 5)."""
    if curve.field.p < 5:
        raise SmallCharacteristic(f"p={curve.field.p} < 5")
    j = curve.j_invariant()
    if j.is_zero():
        return 6
    if j == curve.field.el(1728):
        return 4
    return 2


def automorphism_order_bruteforce(curve: Curve) -> int:
    """Count u in F_{p^2} with u^4 A = A, u^6 B = B (oracle for small p)."""
    w = curve.to_weierstrass()
    fld = w.field
    if fld.f == 1:
        ext = make_field(fld.p, 2)
        A = ext.el(w.A.coeffs[0])
        B = ext.el(w.B.coeffs[0])
    elif fld.f == 2:
        ext, A, B = fld, w.A, w.B
    else:
        raise ValueError("brute-force automorphism search supports f <= 2")
    count = 0
    for u in ext.elements():
        if u.is_zero():
            continue
        u4 = u**4
        if u4 * A == A and u4 * u * u * B == B:
            count += 1
    return count


def point_order(P: Point) -> int:
    """Exact order of P in E(F_q), by stripping primes from the group order."""
    n = P.curve.order
    order = n
    for p, e in factorize(n).items():
        for _ in range(e):
            if order % p == 0 and P.scalar_mul(order // p).is_infinity():
                order //= p
            else:
                break
    return order
