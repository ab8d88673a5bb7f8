"""Desk-scale Hecke correspondences: classical modular polynomials Phi_2 and
Phi_3, Velu isogenies as an independent oracle, the supersingular l-isogeny
graph over F_{p^2}, and clump verification (neighbor closure + (l+1)-regular
out-degree with multiplicity)."""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .curves import Curve, curve_from_j
from .errors import (
    KernelSearchExceeded,
    SmallCharacteristic,
    UnsupportedLevel,
    ValidationFailed,
)
from .fields import FieldDescriptor, FqElement, make_field
from .polys import Poly, roots_in_fq
from .sslocus import enumerate_supersingular

# Classical symmetric modular polynomials, stored on unordered monomial pairs.
_PHI2_TERMS = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}
_PHI3_TERMS = {
    (4, 0): 1,
    (3, 3): -1,
    (3, 2): 2232,
    (3, 1): -1069956,
    (3, 0): 36864000,
    (2, 2): 2587918086,
    (2, 1): 8900222976000,
    (2, 0): 452984832000000,
    (1, 1): -770845966336000000,
    (1, 0): 1855425871872000000000,
}


def _expand_symmetric(terms: dict) -> dict:
    full: dict[tuple[int, int], int] = {}
    for (i, j), c in terms.items():
        full[(i, j)] = c
        full[(j, i)] = c
    return full


@dataclass(frozen=True)
class ModularPolynomial:
    l: int
    coeffs: tuple  # ((i, j, c), ...) over the integers, symmetric

    @property
    def degree(self) -> int:
        return self.l + 1

    def is_symmetric(self) -> bool:
        d = {(i, j): c for i, j, c in self.coeffs}
        return all(d.get((j, i)) == c for (i, j), c in d.items())

    def partial(self, j: FqElement) -> Poly:
        """Phi_l(j, Y) as a polynomial in Y over j's field."""
        fld = j.field
        by_deg: dict[int, list[tuple[int, int]]] = {}
        for i, d, c in self.coeffs:
            by_deg.setdefault(d, []).append((i, c))
        out = []
        for d in range(self.degree + 1):
            acc = fld.zero()
            for i, c in by_deg.get(d, ()):
                acc = acc + fld.el(c) * j**i
            out.append(acc)
        return Poly(fld, out)

    def evaluate(self, x: FqElement, y: FqElement) -> FqElement:
        return self.partial(x).evaluate(y)


def _raw_modular_polynomial(l: int) -> ModularPolynomial:
    if l == 2:
        terms = _PHI2_TERMS
    elif l == 3:
        terms = _PHI3_TERMS
    else:
        raise UnsupportedLevel(f"only l in {{2, 3}} supported, got {l}")
    full = _expand_symmetric(terms)
    return ModularPolynomial(
        l, tuple(sorted((i, j, c) for (i, j), c in full.items()))
    )


# ---------------------------------------------------------------------------
# Velu's formulas (the independent oracle)


def velu_isogenous_j(curve: Curve, l: int) -> list[FqElement]:
    """Codomain j-invariants of the l-isogenies whose kernel x-coordinate is
    rational over the search field: the curve's own field for extension
    fields, else F_{p^2} (l=2) / F_{p^4} (l=3) with the prime-field curve
    coefficients embedded."""
    if l not in (2, 3):
        raise UnsupportedLevel(f"only l in {{2, 3}} supported, got {l}")
    w = curve.to_weierstrass()
    fld = w.field
    if fld.p < 5:
        raise SmallCharacteristic("p >= 5 required")
    if fld.p == l:
        raise ValueError("l must differ from the characteristic")
    if fld.f == 1:
        ext = make_field(fld.p, 2 if l == 2 else 4)
        A = ext.el(w.A.coeffs[0])
        B = ext.el(w.B.coeffs[0])
    else:
        ext, A, B = fld, w.A, w.B
    if l == 2:
        kernel = Poly(ext, [B, A, ext.zero(), ext.one()])
    else:
        # 3-division polynomial: 3x^4 + 6Ax^2 + 12Bx - A^2
        kernel = Poly(
            ext,
            [-(A * A), ext.el(12) * B, ext.el(6) * A, ext.zero(), ext.el(3)],
        )
    out = []
    for x0, _ in roots_in_fq(kernel):
        if l == 2:
            t = ext.el(3) * x0 * x0 + A
            w_ = x0 * t
        else:
            t = ext.el(6) * x0 * x0 + ext.el(2) * A
            u = ext.el(4) * ((x0 * x0 + A) * x0 + B)
            w_ = u + x0 * t
        A2 = A - ext.el(5) * t
        B2 = B - ext.el(7) * w_
        out.append(Curve.weierstrass(ext, A2, B2).j_invariant())
    out.sort(key=lambda e: e.sort_key())
    return out


# ---------------------------------------------------------------------------
# per-run self-validation of the hardcoded tables

_VALIDATION_PRIMES = (101, 103)
_VALIDATION_SAMPLES = 20


def _validate(phi: ModularPolynomial) -> None:
    if not phi.is_symmetric():
        raise ValidationFailed(f"Phi_{phi.l} table is not symmetric")
    rng = random.Random(0xC0FFEE + phi.l)
    for p in _VALIDATION_PRIMES:
        Fp = make_field(p)
        checked = 0
        attempts = 0
        while checked < _VALIDATION_SAMPLES:
            attempts += 1
            if attempts > 40 * _VALIDATION_SAMPLES:
                raise KernelSearchExceeded(
                    f"could not find rational {phi.l}-isogeny kernels over F_{p}"
                )
            A = Fp.el(rng.randrange(p))
            B = Fp.el(rng.randrange(p))
            try:
                E = Curve.weierstrass(Fp, A, B)
            except ValueError:
                continue
            if E.is_supersingular():
                continue
            js = velu_isogenous_j(E, phi.l)
            if not js:
                continue
            ext = js[0].field
            jE = ext.el(E.j_invariant().coeffs[0])
            for j2 in js:
                if not phi.evaluate(jE, j2).is_zero():
                    raise ValidationFailed(
                        f"Phi_{phi.l}(j, j') != 0 for Velu-isogenous pair at p={p}"
                    )
            checked += 1


@functools.lru_cache(maxsize=None)
def modular_polynomial(l: int) -> ModularPolynomial:
    """The classical Phi_l, validated against the Velu oracle once per run."""
    phi = _raw_modular_polynomial(l)
    _validate(phi)
    return phi


# ---------------------------------------------------------------------------
# supersingular isogeny graph and clump checks


@dataclass(frozen=True)
class IsogenyGraph:
    p: int
    l: int
    vertices: tuple[FqElement, ...]
    adjacency: dict  # j -> tuple of (j', multiplicity), sorted


@dataclass(frozen=True)
class ClumpReport:
    p: int
    l: int
    closed: bool
    regular: bool
    connected: bool
    vertex_count: int
    edge_count: int  # directed, with multiplicity


def build_isogeny_graph(p: int, l: int) -> IsogenyGraph:
    if l not in (2, 3):
        raise UnsupportedLevel(f"only l in {{2, 3}} supported, got {l}")
    if p == l:
        raise ValueError("p must differ from l")
    locus = enumerate_supersingular(p)
    phi = modular_polynomial(l)
    adjacency = {}
    for j in locus.j_values:
        rts = roots_in_fq(phi.partial(j))
        adjacency[j] = tuple(sorted(rts, key=lambda t: t[0].sort_key()))
    return IsogenyGraph(p=p, l=l, vertices=locus.j_values, adjacency=adjacency)


def verify_clump(p: int, l: int) -> ClumpReport:
    """Check the supersingular locus is a clump for the l-isogeny
    correspondence: neighbor-closed, out-degree l+1 with multiplicity;
    connectivity is reported as an observation."""
    graph = build_isogeny_graph(p, l)
    vset = set(graph.vertices)
    closed = True
    regular = True
    edges = 0
    for j in graph.vertices:
        deg = 0
        for j2, mult in graph.adjacency[j]:
            deg += mult
            edges += mult
            if j2 not in vset:
                closed = False
        if deg != l + 1:
            regular = False
    # connectivity by traversal, multiplicities ignored
    connected = False
    if graph.vertices:
        seen = {graph.vertices[0]}
        frontier = [graph.vertices[0]]
        while frontier:
            j = frontier.pop()
            for j2, _ in graph.adjacency[j]:
                if j2 in vset and j2 not in seen:
                    seen.add(j2)
                    frontier.append(j2)
        connected = len(seen) == len(vset)
    return ClumpReport(
        p=p,
        l=l,
        closed=closed,
        regular=regular,
        connected=connected,
        vertex_count=len(graph.vertices),
        edge_count=edges,
    )
