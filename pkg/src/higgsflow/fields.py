"""Finite fields F_{p^f} in polynomial basis, with a canonical modulus.

The modulus for (p, f) is the lexicographically smallest monic irreducible
polynomial of degree f over F_p, coefficients compared low-degree-first, so
the field tower is reproducible across runs and platforms.
"""

from __future__ import annotations

import functools
import itertools

from .errors import CompositeP, DivisionByZero, FieldMismatch, UnsupportedRange
from .numtheory import factorize, is_prime

P_MAX = 2**31
F_MAX = 12


# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers mod p (used before FqElement exists)

def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _ptrim(a)
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _ppow_xq(m: list[int], p: int, k: int) -> list[int]:
    """x^(p^k) mod m, by k successive p-th powers."""
    t = [0, 1]
    for _ in range(k):
        t = _ppowmod(t, p, m, p)
    return t


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    b = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return result


def _is_irreducible(m: list[int], p: int) -> bool:
    f = len(m) - 1
    if f > 1 and m[0] == 0:
        return False  # divisible by x
    t = _ppow_xq(m, p, f)
    if t != [0, 1]:
        return False
    for r in factorize(f):
        tk = _ppow_xq(m, p, f // r)
        diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(tk, [0, 1], fillvalue=0)])
        if _pgcd(diff, list(m), p) != [1]:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldDescriptor:
    """The field F_{p^f} with its canonical modulus. Immutable, shareable."""

    __slots__ = ("p", "f", "modulus", "q", "_red")

    def __init__(self, p: int, f: int, modulus: tuple[int, ...]):
        self.p = p
        self.f = f
        self.modulus = modulus
        self.q = p**f
        # reduction rows: u^(f+i) expressed in the basis 1, u, ..., u^(f-1)
        rows = []
        if f > 1:
            row = [(-modulus[k]) % p for k in range(f)]
            rows.append(tuple(row))
            for _ in range(f - 2):
                top = row[-1]
                row = [0] + row[:-1]
                if top:
                    row = [(row[k] + top * rows[0][k]) % p for k in range(f)]
                rows.append(tuple(row))
        self._red = tuple(rows)

    # -- element constructors ------------------------------------------------

    def zero(self) -> "FqElement":
        return FqElement(self, (0,) * self.f)

    def one(self) -> "FqElement":
        return self.el(1)

    def el(self, n: int) -> "FqElement":
        """Embed the integer n via the prime subfield."""
        return FqElement(self, (n % self.p,) + (0,) * (self.f - 1))

    def from_coeffs(self, coeffs) -> "FqElement":
        c = [x % self.p for x in coeffs]
        if len(c) > self.f:
            raise ValueError("too many coefficients")
        c += [0] * (self.f - len(c))
        return FqElement(self, tuple(c))

    def elements(self):
        """All field elements in canonical (c0, c1, ...) lexicographic order."""
        for tup in itertools.product(range(self.p), repeat=self.f):
            yield FqElement(self, tup)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return self is other or (
            isinstance(other, FieldDescriptor)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"FieldDescriptor(p={self.p}, f={self.f})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, f: int = 1) -> FieldDescriptor:
    """Construct F_{p^f} with the canonical modulus. Cached, so descriptors
    with equal (p, f) are the same object."""
    if not isinstance(p, int) or not isinstance(f, int):
        raise UnsupportedRange("p and f must be integers")
    if p < 3 or p >= P_MAX:
        raise UnsupportedRange(f"p={p} outside [3, 2^31)")
    if f < 1 or f > F_MAX:
        raise UnsupportedRange(f"f={f} outside [1, {F_MAX}]")
    if not is_prime(p):
        raise CompositeP(f"{p} is not prime")
    if f == 1:
        return FieldDescriptor(p, 1, (0, 1))
    for tail in itertools.product(range(p), repeat=f):
        if tail[0] == 0:
            continue
        m = list(tail) + [1]
        if _is_irreducible(m, p):
            return FieldDescriptor(p, f, tuple(m))
    raise RuntimeError("unreachable: irreducible polynomial always exists")


class FqElement:
    """An element of F_{p^f}: coefficient tuple in the polynomial basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _same(self, other: "FqElement"):
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        self._same(other)
        p = self.field.p
        return FqElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._same(other)
        p = self.field.p
        return FqElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return FqElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._same(other)
        fld = self.field
        p = fld.p
        f = fld.f
        if f == 1:
            return FqElement(fld, (self.coeffs[0] * other.coeffs[0] % p,))
        a, b = self.coeffs, other.coeffs
        conv = [0] * (2 * f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:f]]
        for e in range(f, 2 * f - 1):
            c = conv[e] % p
            if c:
                row = fld._red[e - f]
                for k in range(f):
                    out[k] = (out[k] + c * row[k]) % p
        return FqElement(fld, tuple(out))

    def inverse(self) -> "FqElement":
        fld = self.field
        p = fld.p
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if fld.f == 1:
            return FqElement(fld, (pow(self.coeffs[0], p - 2, p),))
        # extended Euclid in F_p[x] against the modulus
        a = list(fld.modulus)
        b = _ptrim(list(self.coeffs))
        t0: list[int] = []
        t1: list[int] = [1]
        while b:
            q, r = _pdivmod(a, b, p)
            a, b = b, r
            t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
        inv_lead = pow(a[-1], p - 2, p)
        t0 = [c * inv_lead % p for c in t0]
        return fld.from_coeffs(t0)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e: int) -> "FqElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, FqElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.coeffs))

    def sort_key(self) -> tuple[int, ...]:
        """Canonical total order on field elements: coefficient-lexicographic."""
        return self.coeffs

    def __str__(self):
        return format_fq(self)

    def __repr__(self):
        return f"Fq({self.field.p}^{self.field.f}; {format_fq(self)})"


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [
        (x - y) % p for x, y in itertools.zip_longest(a, b, fillvalue=0)
    ]
    return _ptrim(out)


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _ptrim(a)
    return _ptrim(q), a


# ---------------------------------------------------------------------------
# square roots (Tonelli-Shanks, generic over F_q with q odd)


def quadratic_character(a: FqElement) -> int:
    """1 for nonzero squares, -1 for non-squares, 0 for zero."""
    if a.is_zero():
        return 0
    q = a.field.q
    c = a ** ((q - 1) // 2)
    return 1 if c == a.field.one() else -1


def sqrt_opt(a: FqElement) -> FqElement | None:
    """A square root of a, or None if a is a non-square."""
    fld = a.field
    if a.is_zero():
        return fld.zero()
    if quadratic_character(a) != 1:
        return None
    q = fld.q
    if q % 4 == 3:
        return a ** ((q + 1) // 4)
    # write q - 1 = 2^s * t, find a non-square deterministically
    t = q - 1
    s = 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = None
    for cand in fld.elements():
        if quadratic_character(cand) == -1:
            z = cand
            break
    assert z is not None
    m = s
    c = z**t
    r = a ** ((t + 1) // 2)
    u = a**t
    one = fld.one()
    while u != one:
        # find least i with u^(2^i) = 1
        i = 0
        v = u
        while v != one:
            v = v * v
            i += 1
        b = c ** (2 ** (m - i - 1))
        m = i
        c = b * b
        u = u * c
        r = r * b
    return r


# ---------------------------------------------------------------------------
# literal format: "c0" for prime fields, "c0+c1*u" (+"c2*u^2"...) otherwise


def format_fq(a: FqElement) -> str:
    if a.field.f == 1:
        return str(a.coeffs[0])
    parts = [str(a.coeffs[0])]
    for i, c in enumerate(a.coeffs[1:], start=1):
        parts.append(f"{c}*u" if i == 1 else f"{c}*u^{i}")
    return "+".join(parts)


def parse_fq(field: FieldDescriptor, text: str) -> FqElement:
    text = text.strip()
    coeffs = [0] * field.f
    for part in text.split("+"):
        part = part.strip()
        if "*" in part:
            cstr, ustr = part.split("*", 1)
            ustr = ustr.strip()
            if ustr == "u":
                idx = 1
            elif ustr.startswith("u^"):
                idx = int(ustr[2:])
            else:
                raise ValueError(f"bad element literal: {text!r}")
        else:
            cstr, idx = part, 0
        if idx >= field.f:
            raise ValueError(f"term of degree {idx} in F_p^{field.f} literal")
        coeffs[idx] = (coeffs[idx] + int(cstr)) % field.p
    return field.from_coeffs(coeffs)
