from __future__ import annotations

import random
from fractions import Fraction

import pytest

from salemforge.certify import (
    NPolyForm,
    no_small_palindromic_factor,
    npoly_sign_certificate,
    parse_point,
    residual_system,
    residue_tables,
    sign_certificate,
    verify_root_location_tables,
)
from salemforge.exactpoly import AffineForm, IntPoly
from salemforge.gluing import symbolic_pq, valid_counts
from salemforge.golden import load_golden, mpoly_terms, parse
from salemforge.rootloc import is_irreducible, kempner_transform

SIGN = {"positive": 1, "negative": -1}


@pytest.fixture(scope="module")
def report():
    return verify_root_location_tables()


def test_sign_certificate_examples():
    assert sign_certificate(AffineForm(-21, -2, 13, -17)).verdict == "negative"
    assert sign_certificate(AffineForm(32, 0, 0, 32)).verdict == "positive"
    assert sign_certificate(AffineForm(-32, 0, 0, -32)).verdict == "negative"
    assert sign_certificate(AffineForm(5784, 308, 748, 7368)).verdict == "positive"


def test_sign_certificate_refuses_mixed_sign():
    cert = sign_certificate(AffineForm(0, 1, -1, 0))
    assert cert.verdict is None and not cert.ok
    assert sign_certificate(AffineForm(-5, 0, 0, 1)).verdict is None
    assert sign_certificate(AffineForm(-5, 0, 0, 1), n0=6).verdict == "positive"


def test_npoly_certificate():
    # n^2 - 3n + 3 > 0 for every n; l - n <= 0 fails strictness at l = n
    assert npoly_sign_certificate(NPolyForm(IntPoly((3, -3, 1)), IntPoly(), IntPoly())).verdict == "positive"
    assert npoly_sign_certificate(NPolyForm(IntPoly((0, -1)), IntPoly((1,)), IntPoly())).verdict is None


def test_tables_certified(report):
    assert report.ok
    assert [r.expected for r in report.k_rows] == list("-+-+-+-+-+")
    assert report.k_roots == (2, 7)
    assert report.f_real_roots == 9
    assert report.conclusion.endswith("none integral")


def test_certificates_against_random_points(report):
    rng = random.Random(7)
    pool = list(valid_counts(60))
    Q = symbolic_pq()[1]
    f = residual_system(1).residual[0].univariate()
    for _ in range(1000):
        l, m, n = rng.choice(pool)
        K = kempner_transform(Q.specialize(l, m, n))
        for row in report.k_rows:
            x = parse_point(row.point)
            x = x(n) if isinstance(x, IntPoly) else x
            assert (K(Fraction(x)) > 0) == (SIGN[row.certified] > 0)
        for row in report.f_rows:
            x = parse_point(row.point)
            x = x(n) if isinstance(x, IntPoly) else x
            fl = IntPoly([c(l, m, n) for c in f])
            val = fl(Fraction(x))
            assert val != 0 and (val > 0) == (SIGN[row.certified] > 0)


def test_no_integer_root_small_n():
    f = residual_system(1).residual[0]
    for l, m, n in valid_counts(20):
        for a in range(-(4 * n + 7), 4):
            assert f.at((a,))(l, m, n) != 0


def test_residual_d1_matches_printed():
    g = load_golden()
    f = residual_system(1).residual[0]
    assert f.terms == mpoly_terms(parse(g["quadratic_residual"]), ("a",))
    assert f.terms[(0,)] == AffineForm(6, -4, -2, 6)


def test_residual_d2_matches_printed():
    g = load_golden()
    f, h = residual_system(2).residual
    assert f.terms == mpoly_terms(parse(g["quartic_residual_f"]), ("a", "b"))
    assert h.terms == mpoly_terms(parse(g["quartic_residual_g"]), ("a", "b"))
    assert residual_system(2).substitutions[0].terms == {(1, 0): AffineForm(-1), (0, 0): AffineForm(-6, 0, 0, -4)}


@pytest.mark.parametrize("spec", ["0nn", "n0n"])
def test_residue_table_examples(spec):
    cells = {c.ab: c for c in residue_tables(spec)}
    assert all(c.verdict.startswith(("impossible", "n%3==")) for c in cells.values())
    if spec == "0nn":
        assert cells[(1, 0)].f == (-26, -4) and cells[(1, 0)].g == (32, 8)
        assert cells[(1, 0)].verdict == "impossible"
        assert cells[(0, 0)].f_mod == (-1, 0)
    else:
        assert cells[(1, -1)].f == (-280, -182) and cells[(1, -1)].g == (378, 248)
        assert cells[(1, -1)].verdict == "impossible"
    # no class allows n = 1 (mod 3)
    assert all(1 not in c.allowed for c in cells.values())


@pytest.mark.parametrize("spec", ["0nn", "n0n"])
def test_residue_table_self_consistent(spec):
    f, g = residual_system(2).residual
    for c in residue_tables(spec):
        for n in range(0, 7):
            l, m = (0, n) if spec == "0nn" else (n, 0)
            for shift in ((0, 0), (3, 0), (0, -3), (6, 3)):
                a, b = c.ab[0] + shift[0], c.ab[1] + shift[1]
                assert (f.at((a, b))(l, m, n) - (c.f[0] + c.f[1] * n)) % 3 == 0
                assert (g.at((a, b))(l, m, n) - (c.g[0] + c.g[1] * n)) % 3 == 0


@pytest.mark.parametrize("spec", ["0nn", "n0n"])
@pytest.mark.parametrize("d", [2, 3, 4])
def test_no_small_factor_mod3(spec, d):
    v = no_small_palindromic_factor(spec, d)
    assert v.verdict == "no surviving class"


@pytest.mark.parametrize("spec", ["0nn", "n0n"])
def test_mod3_verdict_agrees_with_factoring(spec):
    Q = symbolic_pq()[1]
    for n in (1, 4, 7, 10, 13):
        counts = (0, n, n) if spec == "0nn" else (n, 0, n)
        assert is_irreducible(Q.specialize(*counts))
