"""The supersingular locus: enumeration over F_{p^2}, Deuring polynomial,
divisor checks, and mass formulas (classical exact + symbolic Shimura-curve
identity)."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .batch import deuring_root_j_image, supersingular_j_sweep
from .curves import Curve, automorphism_order, curve_from_j, hasse_invariant
from .errors import InvalidGenus, RangeTooLarge, UnsupportedRange
from .fields import FqElement, make_field
from .numtheory import is_prime
from .polys import Poly

SS_ENUM_CAP = 2000


@dataclass(frozen=True)
class SupersingularLocus:
    p: int
    j_values: tuple[FqElement, ...]  # sorted by coefficient order, in F_{p^2}
    aut_orders: dict


@dataclass(frozen=True)
class MassReport:
    p: int
    locus_size: int
    mass: Fraction
    expected: Fraction
    passed: bool


def _check_prime(p: int, lo: int = 5, hi: int = SS_ENUM_CAP):
    if not is_prime(p):
        raise UnsupportedRange(f"{p} is not prime")
    if p < lo or p >= hi:
        raise RangeTooLarge(f"p={p} outside [{lo}, {hi})")


@functools.lru_cache(maxsize=None)
def enumerate_supersingular(p: int) -> SupersingularLocus:
    """Exact supersingular j-set over F_{p^2} with automorphism orders.

    The j-sweep result is cross-checked against the Deuring-root image and
    each j is re-verified through the scalar Hasse coefficient of its
    standard model."""
    _check_prime(p)
    pairs = supersingular_j_sweep(p)
    if pairs != deuring_root_j_image(p):
        raise RuntimeError(f"enumeration oracles disagree at p={p}")
    ext = make_field(p, 2)
    js = tuple(ext.from_coeffs(c) for c in pairs)
    for j in js:
        if not hasse_invariant(curve_from_j(j)).is_zero():
            raise RuntimeError(f"j={j} failed supersingularity re-verification")
    if not (p // 12 <= len(js) <= p // 12 + 2):
        raise RuntimeError(f"locus size {len(js)} outside mass-formula bracket")
    auts = {j: automorphism_order(curve_from_j(j)) for j in js}
    return SupersingularLocus(p=p, j_values=js, aut_orders=auts)


def deuring_polynomial(p: int) -> Poly:
    """H_p(lambda) = sum_i binom(m, i)^2 lambda^i over F_p, m = (p-1)/2.
    Its roots are exactly the supersingular Legendre parameters."""
    if p < 3 or not is_prime(p):
        raise UnsupportedRange(f"p={p} must be an odd prime >= 3")
    m = (p - 1) // 2
    Fp = make_field(p)
    return Poly.from_ints(Fp, [math.comb(m, i) ** 2 for i in range(m + 1)])


def hasse_witt_divisor_check(p: int) -> dict:
    """Squarefreeness and degree of H_p (multiplicity-free divisor check)."""
    if p < 5:
        raise UnsupportedRange("p >= 5 required")
    h = deuring_polynomial(p)
    return {
        "p": p,
        "degree": h.degree,
        "squarefree": h.squarefree(),
        "constant_term_one": h.coeffs[0] == h.field.one(),
    }


def mass_check(p: int) -> MassReport:
    """Eichler-Deuring mass: sum of 1/#Aut over the supersingular locus
    equals (p-1)/24, in exact rationals."""
    locus = enumerate_supersingular(p)
    mass = sum((Fraction(1, a) for a in locus.aut_orders.values()), Fraction(0))
    expected = Fraction(p - 1, 24)
    return MassReport(
        p=p,
        locus_size=len(locus.j_values),
        mass=mass,
        expected=expected,
        passed=mass == expected,
    )


def shimura_mass(p: int, f: int, g: int) -> dict:
    """Symbolic Newton-jumping-locus count (p^f - 1)(g - 1) for a genus-g
    curve with residue degree f, with its Euler-characteristic and
    canonical-degree consistency identities."""
    if not is_prime(p):
        raise UnsupportedRange(f"{p} is not prime")
    if f < 1:
        raise UnsupportedRange("f >= 1 required")
    if g < 2:
        raise InvalidGenus("genus >= 2 required")
    q = p**f
    value = (q - 1) * (g - 1)
    chi_top = 2 - 2 * g
    deg_half_canonical = g - 1
    return {
        "p": p,
        "f": f,
        "g": g,
        "value": value,
        "chi_identity_ok": (1 - q) * chi_top // 2 == value,
        "hw_degree_ok": (q - 1) * deg_half_canonical == value,
    }
