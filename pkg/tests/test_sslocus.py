import random
from fractions import Fraction

import pytest

from higgsflow.batch import deuring_root_j_image, dichotomy_sweep, supersingular_j_sweep
from higgsflow.curves import Curve, hasse_invariant, is_supersingular_trace
from higgsflow.errors import InvalidGenus, RangeTooLarge, UnsupportedRange
from higgsflow.fields import make_field
from higgsflow.numtheory import primes_in_range
from higgsflow.sslocus import (
    deuring_polynomial,
    enumerate_supersingular,
    hasse_witt_divisor_check,
    mass_check,
    shimura_mass,
)


def test_locus_small_primes():
    assert [j.coeffs for j in enumerate_supersingular(5).j_values] == [(0, 0)]
    assert [j.coeffs for j in enumerate_supersingular(11).j_values] == [(0, 0), (1, 0)]
    assert [j.coeffs for j in enumerate_supersingular(13).j_values] == [(5, 0)]


def test_locus_size_bracket():
    for p in primes_in_range(5, 120):
        n = len(enumerate_supersingular(p).j_values)
        assert p // 12 <= n <= p // 12 + 2


def test_aut_orders():
    locus = enumerate_supersingular(5)
    (j,) = locus.j_values
    assert j.is_zero() and locus.aut_orders[j] == 6


def test_every_reported_j_is_supersingular():
    from higgsflow.curves import curve_from_j

    for p in (11, 23, 31):
        for j in enumerate_supersingular(p).j_values:
            assert hasse_invariant(curve_from_j(j)).is_zero()


def test_enumeration_input_validation():
    with pytest.raises(UnsupportedRange):
        enumerate_supersingular(15)
    with pytest.raises(RangeTooLarge):
        enumerate_supersingular(2003)


def test_deuring_polynomial_small_cases():
    h3 = deuring_polynomial(3)
    assert [c.coeffs[0] for c in h3.coeffs] == [1, 1]
    h5 = deuring_polynomial(5)
    assert [c.coeffs[0] for c in h5.coeffs] == [1, 4, 1]


def test_deuring_roots_are_supersingular_parameters():
    from higgsflow.polys import roots_in_fq

    p = 13
    ext = make_field(p, 2)
    h = deuring_polynomial(p)
    from higgsflow.polys import Poly

    h_ext = Poly(ext, [ext.el(c.coeffs[0]) for c in h.coeffs])
    for lam, _ in roots_in_fq(h_ext):
        E = Curve.legendre(ext, lam)
        assert E.is_supersingular()


def test_divisor_check_properties():
    for p in primes_in_range(5, 120):
        r = hasse_witt_divisor_check(p)
        assert r["squarefree"]
        assert r["degree"] == (p - 1) // 2
        assert r["constant_term_one"]


def test_mass_examples():
    assert mass_check(5).mass == Fraction(1, 6)
    assert mass_check(11).mass == Fraction(5, 12)
    for p in primes_in_range(5, 120):
        r = mass_check(p)
        assert r.passed and r.mass == Fraction(p - 1, 24)


def test_batch_oracles_agree():
    for p in (5, 11, 13, 37, 101):
        assert supersingular_j_sweep(p) == deuring_root_j_image(p)


def test_dichotomy_sweep_small():
    for p in (5, 7, 11, 13):
        r = dichotomy_sweep(p)
        assert r["mismatches"] == 0
        assert r["curves"] == sum(
            1
            for a in range(p)
            for b in range(p)
            if (4 * a**3 + 27 * b**2) % p != 0
        )


def test_batch_matches_scalar_on_samples():
    rng = random.Random(21)
    p = 37
    fld = make_field(p)
    for _ in range(30):
        a, b = rng.randrange(p), rng.randrange(p)
        if (4 * a**3 + 27 * b**2) % p == 0:
            continue
        E = Curve.weierstrass(fld, fld.el(a), fld.el(b))
        assert is_supersingular_trace(E) == hasse_invariant(E).is_zero()


def test_shimura_mass_identity():
    r = shimura_mass(3, 1, 2)
    assert r["value"] == 2
    assert r["chi_identity_ok"] and r["hw_degree_ok"]
    rng = random.Random(22)
    primes = primes_in_range(3, 200)
    for _ in range(50):
        p = primes[rng.randrange(len(primes))]
        f = rng.randrange(1, 4)
        g = rng.randrange(2, 12)
        r = shimura_mass(p, f, g)
        assert r["value"] == (p**f - 1) * (g - 1)
        assert r["chi_identity_ok"] and r["hw_degree_ok"]


def test_shimura_mass_validation():
    with pytest.raises(InvalidGenus):
        shimura_mass(5, 1, 1)
    with pytest.raises(UnsupportedRange):
        shimura_mass(4, 1, 2)
