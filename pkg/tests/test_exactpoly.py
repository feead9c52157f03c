from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salemforge.exactpoly import (
    ONE,
    T,
    AffineForm,
    IntPoly,
    ParamPoly,
    ParamRatFunc,
    RatFunc,
    bracket,
    cyclotomic,
    is_palindromic,
    poly_gcd,
    ratfunc_combine,
    reciprocal_transform,
    squarefree_decomposition,
)

small = st.integers(-20, 20)
polys = st.lists(small, min_size=0, max_size=7).map(IntPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPoly()


@given(polys, st.integers(-5, 5))
def test_evaluation_is_homomorphism(a, x):
    b = a * a + a
    assert b(x) == a(x) ** 2 + a(x)


@given(polys, st.fractions(min_value=-10, max_value=10, max_denominator=50))
def test_sign_at_matches_fraction_eval(a, x):
    v = a(Fraction(x))
    assert a.sign_at(x) == (v > 0) - (v < 0)


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert g.lead > 0
    assert g.divides(a) and g.divides(b)


@given(nonzero_polys, nonzero_polys)
def test_exact_div_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


@given(nonzero_polys, nonzero_polys)
def test_pseudo_rem_degree_drops(a, b):
    # |lc|^(delta+1) * a = q*b + r with deg r < deg b
    r = a.pseudo_rem(b)
    assert r.deg < b.deg or a.deg < b.deg


@given(polys)
def test_text_roundtrip(a):
    assert IntPoly.from_text(a.to_text()) == a
    assert IntPoly.from_json(a.to_json()) == a


def test_zero_text_form():
    assert IntPoly().to_text() == "0"


@given(nonzero_polys)
def test_reciprocal_transform_involution(a):
    n = a.deg + 2
    assert reciprocal_transform(reciprocal_transform(a, n), n) == a


def test_reciprocal_transform_rejects_low_bound():
    with pytest.raises(ValueError):
        reciprocal_transform(T**3, 2)


def test_bracket_is_cyclotomic_product():
    expected = cyclotomic(2) ** 4 * cyclotomic(3) * cyclotomic(4) * cyclotomic(5) * cyclotomic(6) * cyclotomic(10)
    assert bracket([2, 4, 6, 10]) == expected


def test_cyclotomic_values():
    assert cyclotomic(1) == T - 1
    assert cyclotomic(10) == IntPoly((1, -1, 1, -1, 1))
    assert cyclotomic(12) == IntPoly((1, 0, -1, 0, 1))


@given(st.lists(st.sampled_from([1, 2, 3, 5, 6]), min_size=1, max_size=4))
def test_squarefree_decomposition_reassembles(idx):
    f = ONE
    for i in idx:
        f = f * cyclotomic(i)
    prod = ONE
    for a, k in squarefree_decomposition(f):
        prod = prod * a**k
    assert prod == f.primitive()


def test_palindromic():
    assert is_palindromic(IntPoly((1, 3, 1)))
    assert not is_palindromic(IntPoly((1, 3, 2)))


def test_ratfunc_reduces():
    r = RatFunc(T**2 - 1, T - 1)
    assert r.den == ONE
    assert r.num == T + 1


def test_as_growth_normalizes_constant_term():
    r = RatFunc(T + 1, T - 1)
    assert r.den.lead > 0
    num, den = r.as_growth()
    assert den[0] == 1 and num == IntPoly((-1, -1)) and den == IntPoly((1, -1))
    with pytest.raises(ValueError):
        RatFunc(ONE, IntPoly((2, 1))).as_growth()


def test_one_minus_two_over_bracket():
    r = ratfunc_combine([(1, RatFunc(ONE)), (-2, RatFunc(ONE, bracket([2])))])
    assert r == RatFunc(T - 1, T + 1)


def test_affine_form_rules():
    a = AffineForm(1, 2, 3, 4)
    assert a(1, 1, 1) == 10
    assert a * 2 == AffineForm(2, 4, 6, 8)
    assert str(AffineForm(0, -1, 5, 0)) == "-l + 5m"
    with pytest.raises(ArithmeticError):
        a * a
    with pytest.raises(TypeError):
        AffineForm(Fraction(1, 2))


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9))
def test_param_poly_specializes_linearly(l, m, n):
    p = ParamPoly([AffineForm(1, 1, 0, 0), AffineForm(0, 0, 1, 1)])
    q = p * IntPoly((1, 1))
    assert q.specialize(l, m, n) == p.specialize(l, m, n) * IntPoly((1, 1))


@settings(max_examples=30)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_param_ratfunc_cancels_common_factor(l, m, n):
    g = IntPoly((1, 1, 1))
    num = ParamPoly.from_intpoly(g * 2, AffineForm(0, 1, 0, 0)) + ParamPoly.from_intpoly(g)
    den = ParamPoly.from_intpoly(g * IntPoly((1, -1)))
    r = ParamRatFunc(num, den)
    assert r.den.deg == 1
    spec = r.specialize(l, m, n)
    assert spec == RatFunc(IntPoly.const(2 * l + 1), IntPoly((1, -1)))
