from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salemforge.exactpoly import IntPoly, bracket, cyclotomic
from salemforge.gluing import symbolic_pq
from salemforge.golden import intpoly_from_expr, load_golden
from salemforge.rootloc import (
    MultiplicityError,
    RootLocError,
    SalemKind,
    classify_salem,
    cohn_check,
    cohn_height,
    factor_reciprocal,
    growth_rate,
    is_irreducible,
    is_probable_prime,
    isolate_real_roots,
    kempner_transform,
    lift_trace,
    profile_kempner,
    profile_trace,
    root_profile,
    sturm_count,
    trace_transform,
)

G = load_golden()
L = intpoly_from_expr(G["lehmer_growth_den"])
D = intpoly_from_expr(G["zehrt_den"])


def Q(*counts):
    return symbolic_pq()[1].specialize(*counts)


def test_trace_transform_examples():
    assert trace_transform(IntPoly((1, 0, 1))) == IntPoly((0, 1))
    assert trace_transform(IntPoly((1, 3, 1))) == IntPoly((3, 1))
    h = trace_transform(L)
    assert h.deg == 5
    assert sturm_count(h, -2, 2) == 4
    assert sturm_count(h, 2, 100) + sturm_count(h, -100, -2) == 1
    assert lift_trace(h) == L


def test_trace_rejects_non_palindromic():
    with pytest.raises(RootLocError):
        trace_transform(IntPoly((1, 2, 3)))


@settings(max_examples=40)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5), st.integers(1, 9))
def test_trace_lift_roundtrip(body, lead):
    h = IntPoly(body + [lead])
    assert trace_transform(lift_trace(h)) == h


def test_kempner_examples():
    assert kempner_transform(IntPoly((1, 0, 1))) == IntPoly((-2, 2))
    K = kempner_transform(symbolic_pq()[1])
    assert K.deg == 9
    from salemforge.exactpoly import AffineForm
    assert K[9] == AffineForm(32, 0, 0, 32)
    assert K[0] == AffineForm(-84, -8, 52, -68)


def test_kempner_rejects_root_at_one():
    with pytest.raises((RootLocError, ValueError)):
        kempner_transform(IntPoly((1, -2, 1)))


def test_sturm_examples():
    assert sturm_count(IntPoly((-2, 0, 1)), 0, 2) == 1
    assert sturm_count(IntPoly((1, 0, 1)), -10, 10) == 0
    K = kempner_transform(Q(3, 2, 7))
    assert sturm_count(K, 0, float("inf")) == 7
    with pytest.raises(RootLocError):
        sturm_count(IntPoly((-1, 1)), 1, 2)


def test_isolation_widths():
    ivs = isolate_real_roots(IntPoly((-2, 0, 1)), Fraction(1, 10**12))
    assert len(ivs) == 2
    assert all(iv.width < Fraction(1, 10**12) for iv in ivs)
    lo, hi = ivs[1].lo, ivs[1].hi
    assert lo * lo < 2 < hi * hi and lo > 0


def test_largest_roots():
    top = isolate_real_roots(L)[-1].refine(Fraction(1, 10**5))
    assert top.lo < 1.176281 and top.hi > 1.176280 and top.width < Fraction(1, 10**5)
    roots = [iv.refine(Fraction(1, 10**8)) for iv in isolate_real_roots(D)]
    assert abs(float(roots[-1]) - 3.70422) < 5e-6
    assert abs(float(roots[-2]) - 1.24202) < 5e-6


@pytest.mark.parametrize("poly,expected", [("L", (4, 1)), ("D", (6, 2)), ("Q", (7, 2))])
def test_profiles(poly, expected):
    f = {"L": L, "D": D, "Q": Q(3, 2, 7)}[poly]
    p = root_profile(f)
    assert (p.circle_pairs, p.real_pairs, p.unresolved) == (*expected, 0)


def test_two_routes_agree_on_family():
    P, Qs = symbolic_pq()
    for n in range(0, 31, 3):
        for l, m in ((0, 0), (0, n), (n // 2, n // 2)):
            q = Qs.specialize(l, m, n)
            assert profile_kempner(q) == profile_trace(q)


def test_profile_rejects_repeated_root():
    with pytest.raises(MultiplicityError):
        root_profile(IntPoly((1, 3, 1)) ** 2)


def test_factor_examples():
    P = bracket([2, 4, 6, 10])
    got = factor_reciprocal(P)
    assert len(got) == 9
    assert sorted(got, key=lambda p: p.coeffs) == sorted(
        [cyclotomic(2)] * 4 + [cyclotomic(k) for k in (3, 4, 5, 6, 10)], key=lambda p: p.coeffs)
    assert factor_reciprocal(L) == [L]
    a, b = IntPoly((1, 3, 1)), IntPoly((1, 1, 1))
    assert sorted(factor_reciprocal(a * b), key=lambda p: p.coeffs) == sorted([a, b], key=lambda p: p.coeffs)


def test_factor_product_reassembles_and_tamper_detected():
    f = IntPoly((1, 3, 1)) * IntPoly((1, -5, 1)) * cyclotomic(5)
    parts = factor_reciprocal(f)
    prod = IntPoly((1,))
    for p in parts:
        prod = prod * p
    assert prod == f
    tampered = parts[:-1] + [parts[-1] + IntPoly((0, 1))]
    prod = IntPoly((1,))
    for p in tampered:
        prod = prod * p
    assert prod != f


def test_irreducibility():
    assert is_irreducible(Q(0, 1, 1))
    assert is_irreducible(D)
    assert not is_irreducible(IntPoly((1, 3, 1)) ** 2)
    for n in (1, 4, 7, 10, 13):
        assert is_irreducible(Q(0, n, n)) and is_irreducible(Q(n, 0, n))


def test_classification():
    assert classify_salem(L).kind is SalemKind.SALEM
    assert classify_salem(D).kind is SalemKind.TWO_SALEM
    assert classify_salem(cyclotomic(5)).kind is SalemKind.NEITHER


def test_growth_rates():
    assert abs(float(growth_rate(L)) - 1.17628) < 5e-6
    one = growth_rate(IntPoly((1, -1)))
    assert one.lo <= 1 <= one.hi
    for counts in ((0, 0, 0), (3, 2, 7), (0, 5, 5), (10, 10, 20)):
        l, m, n = counts
        tau = growth_rate(Q(*counts))
        assert tau.width < Fraction(1, 10**12)
        assert 4 * n + 5 < tau.lo and tau.hi < 4 * n + m + l + 6
    with pytest.raises(RootLocError):
        growth_rate(IntPoly((1, 0, 1)))


def test_cohn():
    assert cohn_height(D) == 4
    w = cohn_check(D)
    assert w.n == 186 and str(w.value).startswith("2008067839") and w.value == int(G["zehrt_cohn_value"])
    # t^2+t+4 has H = 4 and even values everywhere, so the scan from 6 finds nothing
    assert cohn_height(IntPoly((4, 1, 1))) == 4
    assert cohn_check(IntPoly((4, 1, 1)), bound=200) is None
    # t^2+t+1: the scan starts at H + 2 = 3 and 13 is prime
    assert cohn_check(IntPoly((1, 1, 1))).n == 3


def test_miller_rabin():
    primes = [2, 3, 5, 97, 7919, 2**61 - 1, 2**89 - 1]
    composites = [1, 0, 4, 561, 1105, 3215031751, 2**61 + 1, (2**31 - 1) * (2**61 - 1)]
    assert all(is_probable_prime(p) for p in primes)
    assert not any(is_probable_prime(c) for c in composites)
