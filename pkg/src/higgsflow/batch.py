"""Vectorized per-prime sweep kernels.

These back the exhaustive verification suites (all-curves dichotomy checks,
supersingular j-sweeps over F_{p^2}, Deuring-root evaluation), where a
per-curve Python loop would blow the runtime budget. They share the exact
term/character formulas with the scalar APIs in `curves`, and the test suite
cross-checks the two paths on random samples.
"""

from __future__ import annotations

import math

import numpy as np

from .curves import _fp_count_tables, hasse_terms
from .fields import make_field


def _pow_vec(base: np.ndarray, e: int, p: int) -> np.ndarray:
    """Elementwise base^e mod p."""
    result = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


def dichotomy_sweep(p: int) -> dict:
    """Compare trace-based and Hasse-coefficient supersingularity for every
    nonsingular (A, B) in F_p^2. Returns counts; mismatches should be 0."""
    x, x3, chi = _fp_count_tables(p)
    chi2 = np.concatenate([chi, chi])
    A = np.arange(p, dtype=np.int64)
    B = np.arange(p, dtype=np.int64)

    # trace matrix, one row of B-values per A
    a_mat = np.empty((p, p), dtype=np.int64)
    for ai in range(p):
        v = (x3 + ai * x) % p
        a_mat[ai] = -chi2[v[:, None] + B[None, :]].sum(axis=0)

    # Hasse coefficient matrix via outer products of power tables
    H = np.zeros((p, p), dtype=np.int64)
    for c, j, k in hasse_terms(p):
        aj = _pow_vec(A, j, p) if j else np.ones(p, dtype=np.int64)
        bk = _pow_vec(B, k, p) if k else np.ones(p, dtype=np.int64)
        H += np.outer(c * aj % p, bk)
    H %= p

    disc = (4 * _pow_vec(A, 3, p)[:, None] + 27 * _pow_vec(B, 2, p)[None, :]) % p
    nonsing = disc != 0
    ss_trace = (a_mat % p == 0) & nonsing
    ss_hasse = (H == 0) & nonsing
    mism = int(np.count_nonzero(ss_trace != ss_hasse))
    return {
        "p": p,
        "curves": int(np.count_nonzero(nonsing)),
        "supersingular": int(np.count_nonzero(ss_trace)),
        "mismatches": mism,
    }


# ---------------------------------------------------------------------------
# vectorized F_{p^2} arithmetic in the canonical polynomial basis


class _Fq2Vec:
    """Elementwise arithmetic on arrays of F_{p^2} elements (c0, c1 pairs)."""

    def __init__(self, p: int):
        fld = make_field(p, 2)
        self.p = p
        self.q = p * p
        self.c0 = fld.modulus[0]
        self.c1 = fld.modulus[1]

    def mul(self, a, b):
        p = self.p
        a0, a1 = a
        b0, b1 = b
        t = a1 * b1 % p
        r0 = (a0 * b0 - self.c0 * t) % p
        r1 = (a0 * b1 + a1 * b0 - self.c1 * t) % p
        return r0, r1

    def scale(self, c: int, a):
        p = self.p
        return (c * a[0] % p, c * a[1] % p)

    def add(self, a, b):
        p = self.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def sub(self, a, b):
        p = self.p
        return ((a[0] - b[0]) % p, (a[1] - b[1]) % p)

    def pow(self, a, e: int):
        r = (np.ones_like(a[0]), np.zeros_like(a[1]))
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a):
        return self.pow(a, self.q - 2)


def _grid(p: int):
    a = np.arange(p, dtype=np.int64)
    return np.repeat(a, p), np.tile(a, p)


def supersingular_j_sweep(p: int) -> list[tuple[int, int]]:
    """Supersingular j-invariants in F_{p^2}, as sorted (c0, c1) pairs, by
    testing the Hasse coefficient of the standard curve of every j."""
    F = _Fq2Vec(p)
    j0, j1 = _grid(p)
    special = (j1 == 0) & ((j0 == 0) | (j0 == 1728 % p))
    keep = ~special
    j = (j0[keep], j1[keep])

    E = ((1728 - j[0]) % p, (-j[1]) % p)
    jE = F.mul(j, E)
    A = F.scale(3, jE)
    B = F.scale(2, F.mul(jE, E))

    m = (p - 1) // 2
    i0, i1 = (m + 1) // 2, 2 * m // 3
    Apow = F.pow(A, 2 * m - 3 * i0)
    Bpow = F.pow(B, 2 * i0 - m)
    invA3 = F.inv(F.pow(A, 3))
    B2 = F.mul(B, B)
    acc0 = np.zeros_like(j[0])
    acc1 = np.zeros_like(j[0])
    for i in range(i0, i1 + 1):
        c = math.comb(m, i) * math.comb(m - i, 2 * m - 3 * i) % p
        if c:
            t0, t1 = F.mul(Apow, Bpow)
            acc0 += c * t0
            acc1 += c * t1
        if i < i1:
            Apow = F.mul(Apow, invA3)
            Bpow = F.mul(Bpow, B2)
    zero = ((acc0 % p) == 0) & ((acc1 % p) == 0)
    out = list(zip(j[0][zero].tolist(), j[1][zero].tolist()))

    # the two special j-values, decided by the scalar Hasse coefficient
    from .curves import Curve, hasse_invariant

    Fp = make_field(p)
    if hasse_invariant(Curve.weierstrass(Fp, Fp.zero(), Fp.one())).is_zero():
        out.append((0, 0))
    if hasse_invariant(Curve.weierstrass(Fp, Fp.one(), Fp.zero())).is_zero():
        out.append((1728 % p, 0))
    return sorted(out)


def deuring_root_j_image(p: int) -> list[tuple[int, int]]:
    """Roots of the Deuring polynomial H_p over F_{p^2}, pushed through the
    Legendre-to-j map; sorted distinct (c0, c1) pairs."""
    F = _Fq2Vec(p)
    lam = _grid(p)
    m = (p - 1) // 2
    coeffs = [math.comb(m, i) ** 2 % p for i in range(m + 1)]
    acc = (np.zeros_like(lam[0]), np.zeros_like(lam[0]))
    ones = np.ones_like(lam[0])
    for c in reversed(coeffs):
        acc = F.mul(acc, lam)
        acc = ((acc[0] + c) % p, acc[1])
    is_root = (acc[0] == 0) & (acc[1] == 0)
    l0 = lam[0][is_root]
    l1 = lam[1][is_root]
    r = (l0, l1)
    one = (ones[is_root], np.zeros_like(l0))
    # j = 256 (lam^2 - lam + 1)^3 / (lam^2 (lam-1)^2)
    l2 = F.mul(r, r)
    num = F.sub(F.add(l2, one), r)
    num = F.scale(256, F.pow(num, 3))
    lm1 = F.sub(r, one)
    den = F.mul(l2, F.mul(lm1, lm1))
    jval = F.mul(num, F.inv(den))
    return sorted(set(zip(jval[0].tolist(), jval[1].tolist())))
