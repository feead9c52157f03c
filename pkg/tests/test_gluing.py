from __future__ import annotations

import random

import pytest

from salemforge.exactpoly import AffineForm, IntPoly, RatFunc, bracket, is_palindromic, poly_gcd
from salemforge.gluing import (
    GluingCounts,
    GluingError,
    base_growth,
    check_order_independence,
    domino_growth,
    domino_symbolic,
    facet_classes,
    glue,
    symbolic_pq,
    valid_counts,
    validate_counts,
)
from salemforge.golden import intpoly_from_expr, load_golden


@pytest.mark.parametrize("counts,ok", [((3, 2, 7), True), ((0, 0, 3), False), ((0, 5, 5), True),
                                       ((0, 0, 0), True), ((2, 2, 3), False), ((-1, 1, 1), False)])
def test_validate_counts(counts, ok):
    assert validate_counts(*counts)[0] is ok


def test_gluing_counts_rejects_invalid():
    with pytest.raises(ValueError):
        GluingCounts(0, 0, 3)


def test_valid_counts_order_and_size():
    rows = list(valid_counts(1))
    assert rows == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1)]


def test_facet_classes():
    classes = facet_classes()
    assert {k: c.multiplicity for k, c in classes.items()} == {"A": 2, "B": 2, "C": 1}
    A, B = classes["A"].growth.as_growth()[0], classes["B"].growth.as_growth()[0]
    expected = IntPoly((1, 1)) ** 3 * IntPoly((1, 0, 1)) * IntPoly((1, -1, 1)) * IntPoly((1, -1, 1, -1, 1))
    assert A == B == expected
    assert IntPoly((1, -2, -1, 3, -1, -2, 1)).divides(classes["C"].growth.as_growth()[1])


def test_base_growth_matches_printed():
    g = load_golden()
    W = base_growth()
    assert W == domino_growth((0, 0, 0))
    assert W.as_growth()[1] == intpoly_from_expr(g["domino_Q"])


def test_glue_cross_paths():
    W = base_growth()
    c = facet_classes()
    assert glue(W, W, c["B"].growth) == domino_growth((0, 1, 1))
    assert glue(W, W, c["A"].growth) == domino_growth((1, 0, 1))
    assert glue(W, W, c["C"].growth) == domino_growth((0, 0, 1))


def test_glue_symmetric():
    W = base_growth()
    W1 = domino_growth((0, 1, 1))
    f = facet_classes()["C"].growth
    assert glue(W, W1, f) == glue(W1, W, f)


def test_glue_degenerate():
    one = RatFunc(IntPoly((1,)))
    # (t-1)/(t+1) * 1/f = -2 cancels 1/w1 + 1/w2
    f = RatFunc(IntPoly((1, -1)), IntPoly((2, 2)))
    with pytest.raises(GluingError):
        glue(one, one, f)


def test_printed_example_coefficients():
    num, den = domino_growth((3, 2, 7)).as_growth()
    assert den.deg == 18 and den.coeffs[17] == -34 and den.coeffs[16] == 15
    assert num == bracket([2, 4, 6, 10])


def test_symbolic_form():
    P, Q = symbolic_pq()
    assert P == bracket([2, 4, 6, 10])
    assert Q[11] == AffineForm(0, -1, 5, 0)
    assert Q[18] == AffineForm(1)
    assert Q[17] == AffineForm(-6, 0, 0, -4)
    total = AffineForm(0)
    for k in range(19):
        total = total + Q[k]
    assert total == AffineForm(32, 0, 0, 32)


def test_symbolic_matches_printed():
    Q = symbolic_pq()[1]
    from salemforge.golden import parampoly_from_expr
    assert Q == parampoly_from_expr(load_golden()["domino_Q_lmn"], "t")


def test_symbolic_specializes_to_numeric():
    rng = random.Random(20241016)
    pool = list(valid_counts(60))
    sym = domino_symbolic()
    for counts in rng.sample(pool, 200):
        assert sym.specialize(*counts) == domino_growth(counts)


def test_q_palindromic_and_coprime():
    P, Q = symbolic_pq()
    for counts in valid_counts(8):
        q = Q.specialize(*counts)
        assert q.deg == 18 and is_palindromic(q)
        assert poly_gcd(P, q) == IntPoly((1,))


def test_order_independence():
    assert check_order_independence(4) == []
