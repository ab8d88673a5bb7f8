import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgsflow.fields import make_field
from higgsflow.polys import Poly, pow_mod, roots_in_fq

F5 = make_field(5)
F25 = make_field(5, 2)


def test_zero_polynomial_normalization():
    assert Poly.from_ints(F5, [0, 0, 0]).is_zero()
    assert Poly.from_ints(F5, [1, 0]).degree == 0


def test_divmod_identity():
    a = Poly.from_ints(F5, [1, 2, 0, 3, 4])
    b = Poly.from_ints(F5, [2, 1, 1])
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_of_shared_factor():
    lin = Poly.from_ints(F5, [3, 1])  # x + 3
    a = lin * Poly.from_ints(F5, [1, 1])
    b = lin * Poly.from_ints(F5, [2, 0, 1])
    assert a.gcd(b) == lin.monic()


def test_squarefree_examples():
    lin = Poly.from_ints(F5, [3, 1])
    assert (lin * Poly.from_ints(F5, [1, 1])).squarefree()
    assert not (lin * lin).squarefree()
    assert not Poly(F5, []).squarefree()


def test_legendre_quadratic_roots_split_in_extension():
    # lambda^2 + 4 lambda + 1 has no roots over F_5 but two over F_25
    over_fp = Poly.from_ints(F5, [1, 4, 1])
    assert roots_in_fq(over_fp) == []
    over_fq = Poly.from_ints(F25, [1, 4, 1])
    rts = roots_in_fq(over_fq)
    assert len(rts) == 2 and all(m == 1 for _, m in rts)
    for r, _ in rts:
        assert over_fq.evaluate(r).is_zero()


def test_multiplicities_reported():
    r = F5.el(2)
    lin = Poly(F5, [-r, F5.one()])
    cube = lin * lin * lin * Poly.from_ints(F5, [1, 1])
    got = dict(roots_in_fq(cube))
    assert got[r] == 3


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        roots_in_fq(Poly(F5, []))


def test_pow_mod_matches_repeated_multiplication():
    mod = Poly.from_ints(F5, [1, 0, 1])
    base = Poly.from_ints(F5, [2, 3])
    by_hand = Poly.from_ints(F5, [1])
    for _ in range(7):
        by_hand = (by_hand * base) % mod
    assert pow_mod(base, 7, mod) == by_hand


_FIELDS = [make_field(7), make_field(31), make_field(5, 2), make_field(3, 3)]


@st.composite
def random_poly(draw):
    fld = draw(st.sampled_from(_FIELDS))
    deg = draw(st.integers(1, 6))
    coeffs = [
        fld.from_coeffs([draw(st.integers(0, fld.p - 1)) for _ in range(fld.f)])
        for _ in range(deg)
    ]
    coeffs.append(fld.one())
    return Poly(fld, coeffs)


@settings(max_examples=150, deadline=None)
@given(random_poly())
def test_root_finder_matches_exhaustive_evaluation(pol):
    assert roots_in_fq(pol) == roots_in_fq(pol, exhaustive=True)


def test_root_finder_deterministic():
    rng = random.Random(7)
    for _ in range(10):
        pol = Poly.from_ints(F25, [rng.randrange(5) for _ in range(5)] + [1])
        assert roots_in_fq(pol) == roots_in_fq(pol)
