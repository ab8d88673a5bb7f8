import random

import pytest

from higgsflow.curves import (
    Curve,
    Point,
    automorphism_order,
    automorphism_order_bruteforce,
    count_points,
    curve_from_j,
    hasse_invariant,
    is_supersingular_trace,
    point_order,
    quadratic_twist,
    random_point,
)
from higgsflow.errors import CurveMismatch, SmallCharacteristic
from higgsflow.fields import make_field

F5 = make_field(5)
F7 = make_field(7)


def test_counts_over_f5():
    n, a = count_points(Curve.weierstrass(F5, F5.el(1), F5.el(0)))
    assert (n, a) == (4, 2)
    n, a = count_points(Curve.weierstrass(F5, F5.el(0), F5.el(1)))
    assert (n, a) == (6, 0)


def test_hasse_invariant_examples():
    assert hasse_invariant(Curve.weierstrass(F5, F5.el(1), F5.el(0))) == F5.el(2)
    assert hasse_invariant(Curve.weierstrass(F5, F5.el(0), F5.el(1))).is_zero()


def test_supersingular_oracles_agree_on_examples():
    # y^2 = x^3 + x is supersingular exactly when p = 3 mod 4
    for p, expect in ((7, True), (13, False), (103, True)):
        fld = make_field(p)
        E = Curve.weierstrass(fld, fld.el(1), fld.el(0))
        assert is_supersingular_trace(E) is expect
        assert hasse_invariant(E).is_zero() is expect


def test_singular_curve_rejected():
    with pytest.raises(ValueError):
        Curve.weierstrass(F5, F5.el(0), F5.el(0))
    with pytest.raises(SmallCharacteristic):
        Curve.weierstrass(make_field(3), make_field(3).el(1), make_field(3).el(1))


def test_group_law_basics():
    E = Curve.weierstrass(F5, F5.el(1), F5.el(0))
    P = Point(E, F5.el(0), F5.el(0))
    assert (P + P).is_infinity()
    assert point_order(P) == 2
    O = Point.infinity(E)
    assert P + O == P and O + P == P
    assert (P - P).is_infinity()


def test_point_must_satisfy_equation():
    E = Curve.weierstrass(F5, F5.el(1), F5.el(0))
    with pytest.raises(ValueError):
        Point(E, F5.el(1), F5.el(1))


def test_curve_mismatch():
    E1 = Curve.weierstrass(F5, F5.el(1), F5.el(0))
    E2 = Curve.weierstrass(F5, F5.el(1), F5.el(1))
    with pytest.raises(CurveMismatch):
        Point.infinity(E1) + Point.infinity(E2)


def test_group_law_associativity_random():
    rng = random.Random(11)
    fld = make_field(101)
    for _ in range(20):
        try:
            E = Curve.weierstrass(fld, fld.el(rng.randrange(101)), fld.el(rng.randrange(101)))
        except ValueError:
            continue
        P, Q, R = (random_point(E, rng) for _ in range(3))
        assert (P + Q) + R == P + (Q + R)


def test_lagrange_random_points():
    rng = random.Random(12)
    for p in (13, 101):
        fld = make_field(p)
        for _ in range(10):
            try:
                E = Curve.weierstrass(fld, fld.el(rng.randrange(p)), fld.el(rng.randrange(p)))
            except ValueError:
                continue
            P = random_point(E, rng)
            n = point_order(P)
            assert E.order % n == 0
            assert P.scalar_mul(n).is_infinity()
            if n % 2 == 0:
                assert not P.scalar_mul(n // 2).is_infinity()


def test_j_invariant_round_trip():
    fld = make_field(13)
    for jv in range(13):
        j = fld.el(jv)
        assert curve_from_j(j).j_invariant() == j


def test_j_round_trip_in_extension():
    ext = make_field(7, 2)
    for j in ext.elements():
        assert curve_from_j(j).j_invariant() == j


def test_legendre_conversion_preserves_j():
    E = Curve.legendre(F5, F5.el(2))
    assert E.j_invariant() == F5.el(1728 % 5)
    W = E.to_weierstrass()
    assert W.j_invariant() == E.j_invariant()
    assert count_points(W) == count_points(E)


def test_automorphism_orders_match_bruteforce():
    for p in (5, 7, 13):
        fld = make_field(p)
        for jv in range(p):
            E = curve_from_j(fld.el(jv))
            assert automorphism_order(E) == automorphism_order_bruteforce(E)


def test_twist_negates_trace():
    rng = random.Random(13)
    fld = make_field(101)
    done = 0
    while done < 25:
        try:
            E = Curve.weierstrass(fld, fld.el(rng.randrange(101)), fld.el(rng.randrange(101)))
        except ValueError:
            continue
        done += 1
        assert quadratic_twist(E).trace == -E.trace


def test_bsgs_matches_exhaustive():
    rng = random.Random(14)
    fld = make_field(1009)
    for _ in range(10):
        try:
            E = Curve.weierstrass(fld, fld.el(rng.randrange(1009)), fld.el(rng.randrange(1009)))
        except ValueError:
            continue
        n_ex = count_points(E, method="exhaustive")[0]
        E2 = Curve.weierstrass(fld, E.A, E.B)
        n_bs = count_points(E2, method="bsgs")[0]
        assert n_ex == n_bs


def test_count_over_extension_field():
    # q = 25: orders lie in the Hasse interval and match a direct square count
    ext = make_field(5, 2)
    E = Curve.weierstrass(ext, ext.el(1), ext.el(1))
    n, a = count_points(E)
    assert n == 25 + 1 - a and a * a <= 100


def test_supersingular_trace_over_fp2():
    # supersingular over F_{p^2} forces trace = +-2p (here via the Hasse oracle)
    ext = make_field(7, 2)
    E = Curve.weierstrass(ext, ext.el(1), ext.el(0))
    assert E.is_supersingular()
    assert abs(E.trace) == 14
