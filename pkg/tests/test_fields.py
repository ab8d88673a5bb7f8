import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgsflow.errors import CompositeP, DivisionByZero, FieldMismatch, UnsupportedRange
from higgsflow.fields import (
    format_fq,
    make_field,
    parse_fq,
    quadratic_character,
    sqrt_opt,
)


def test_prime_field_modulus_convention():
    assert make_field(5, 1).modulus == (0, 1)


def test_canonical_modulus_small_cases():
    # -1 is a non-residue mod 3 and mod 7, so x^2 + 1 is the lex-smallest
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(7, 2).modulus == (1, 0, 1)


def test_descriptor_identity():
    assert make_field(13, 2) is make_field(13, 2)


def test_make_field_rejects_bad_input():
    with pytest.raises(CompositeP):
        make_field(9, 1)
    with pytest.raises(UnsupportedRange):
        make_field(2, 1)
    with pytest.raises(UnsupportedRange):
        make_field(5, 13)
    with pytest.raises(UnsupportedRange):
        make_field(2**31 + 11, 1)


def test_inverse_example():
    F5 = make_field(5)
    assert F5.el(2).inverse() == F5.el(3)


def test_frobenius_is_identity_on_fq():
    F9 = make_field(3, 2)
    x = F9.from_coeffs([0, 1])
    assert x**9 == x


def test_sqrt_examples():
    F5 = make_field(5)
    assert sqrt_opt(F5.el(2)) is None  # squares mod 5 are {0, 1, 4}
    r = sqrt_opt(F5.el(4))
    assert r is not None and r * r == F5.el(4)


def test_division_by_zero():
    F5 = make_field(5)
    with pytest.raises(DivisionByZero):
        F5.zero().inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field(5).el(1) + make_field(7).el(1)


_FIELDS = [make_field(5), make_field(101), make_field(3, 2), make_field(5, 3)]


@st.composite
def field_and_elements(draw, n):
    fld = draw(st.sampled_from(_FIELDS))
    els = [
        fld.from_coeffs([draw(st.integers(0, fld.p - 1)) for _ in range(fld.f)])
        for _ in range(n)
    ]
    return fld, els


@settings(max_examples=200)
@given(field_and_elements(3))
def test_ring_axioms(fe):
    fld, (a, b, c) = fe
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(field_and_elements(1))
def test_inverse_axiom(fe):
    fld, (a,) = fe
    if not a.is_zero():
        assert a * a.inverse() == fld.one()


@settings(max_examples=100)
@given(field_and_elements(1))
def test_frobenius_fixes_field(fe):
    fld, (a,) = fe
    assert a**fld.q == a


@settings(max_examples=100)
@given(field_and_elements(1))
def test_sqrt_consistent_with_character(fe):
    fld, (a,) = fe
    r = sqrt_opt(a)
    if quadratic_character(a) >= 0:
        assert r is not None and r * r == a
    else:
        assert r is None


@settings(max_examples=100)
@given(field_and_elements(1))
def test_literal_round_trip(fe):
    fld, (a,) = fe
    assert parse_fq(fld, format_fq(a)) == a
