"""Univariate polynomials over F_q: arithmetic, gcd, root finding."""

from __future__ import annotations

import random

from .errors import FieldMismatch
from .fields import FieldDescriptor, FqElement


class Poly:
    """Polynomial over a finite field; zero polynomial has no coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field: FieldDescriptor, ints) -> "Poly":
        return cls(field, [field.el(n) for n in ints])

    @classmethod
    def x(cls, field: FieldDescriptor) -> "Poly":
        return cls(field, [field.zero(), field.one()])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other):
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else z
            y = other.coeffs[i] if i < len(other.coeffs) else z
            out.append(x - y)
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        self._same(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, [])
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c: FqElement) -> "Poly":
        return Poly(self.field, [a * c for a in self.coeffs])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.coeffs[-1].inverse()
        z = self.field.zero()
        quo = [z] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - db
            quo[shift] = c
            for i, bi in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * bi
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(self.field, quo), Poly(self.field, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.coeffs[-1].inverse())

    def gcd(self, other: "Poly") -> "Poly":
        self._same(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(c * self.field.el(i))
        return Poly(self.field, out)

    def squarefree(self) -> bool:
        """True iff gcd(h, h') = 1. False for the zero polynomial."""
        if self.is_zero():
            return False
        g = self.gcd(self.derivative())
        return g.degree == 0

    def evaluate(self, x: FqElement) -> FqElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base^e reduced mod `mod`."""
    result = Poly(base.field, [base.field.one()])
    b = base % mod
    while e:
        if e & 1:
            result = (result * b) % mod
        b = (b * b) % mod
        e >>= 1
    return result


def _seed_for(poly: Poly) -> int:
    s = poly.field.p * 1_000_003 + poly.field.f
    for c in poly.coeffs:
        for v in c.coeffs:
            s = (s * 131 + v + 7) % (2**61 - 1)
    return s


def roots_in_fq(poly: Poly, exhaustive: bool = False) -> list[tuple[FqElement, int]]:
    """Roots of poly in its field of definition, with multiplicity, sorted by
    the canonical element order.

    The default path finds distinct roots by equal-degree splitting of
    gcd(poly, x^q - x) and obtains multiplicities by repeated deflation.
    `exhaustive=True` instead evaluates at every field element (the fallback
    oracle; only sensible for small q).
    """
    if poly.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    fld = poly.field
    if exhaustive:
        distinct = [x for x in fld.elements() if poly.evaluate(x).is_zero()]
    else:
        distinct = _distinct_roots(poly)
    out = []
    for r in distinct:
        lin = Poly(fld, [-r, fld.one()])
        mult = 0
        h = poly
        while True:
            q, rem = h.divmod(lin)
            if not rem.is_zero():
                break
            mult += 1
            h = q
        out.append((r, mult))
    out.sort(key=lambda t: t[0].sort_key())
    return out


def _distinct_roots(poly: Poly) -> list[FqElement]:
    fld = poly.field
    q = fld.q
    x = Poly.x(fld)
    h = poly.monic()
    if h.degree == 0:
        return []
    # split off the product of distinct linear factors
    xq = pow_mod(x, q, h)
    lin = h.gcd(xq - x)
    rng = random.Random(_seed_for(poly))
    roots: list[FqElement] = []
    stack = [lin]
    one = Poly(fld, [fld.one()])
    while stack:
        g = stack.pop()
        if g.degree <= 0:
            continue
        if g.degree == 1:
            roots.append(-(g.coeffs[0] * g.coeffs[1].inverse()))
            continue
        if g.coeffs[0].is_zero():
            roots.append(fld.zero())
            stack.append(g // Poly.x(fld))
            continue
        while True:
            delta = fld.from_coeffs([rng.randrange(fld.p) for _ in range(fld.f)])
            shift = Poly(fld, [delta, fld.one()])
            w = pow_mod(shift, (q - 1) // 2, g) - one
            d = g.gcd(w)
            if 0 < d.degree < g.degree:
                stack.append(d)
                stack.append(g // d)
                break
    return roots
