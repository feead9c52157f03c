from __future__ import annotations

import pytest

from salemforge.coxeter import CoxeterGraph, builtin_graph
from salemforge.geometry import (
    GeometryError,
    GramMatrix,
    det,
    gram_from_graph,
    isomorphic,
    signature,
    verify_domino_geometry,
)
from salemforge.qfield import ONE, QSqrt5


@pytest.fixture(scope="module")
def report():
    return verify_domino_geometry()


def test_simplex_is_lorentzian(report):
    assert report.signature == (4, 1)
    assert report.det_negative


def test_truncation_disjointness(report):
    t = report.truncation
    assert t.opposite_disjoint and all(t.opposite_disjoint.values())
    assert t.mutual_disjoint and all(t.mutual_disjoint.values())
    assert t.ok


def test_compact_and_matches_builtin(report):
    assert report.compact
    assert report.compactness.edge_extensions_ok
    assert report.star_matches_builtin
    assert report.ok


def test_lanner_spans_are_full(report):
    k = 5
    lanner = [J for J in report.compactness.rank_by_subset if max(J) < k]
    assert lanner
    assert all(report.compactness.rank_by_subset[J] == 5 for J in lanner)


def test_spherical_graph_is_positive_definite():
    g = CoxeterGraph(3, {(0, 1): 5, (1, 2): 3})
    assert signature(gram_from_graph(g)) == (3, 0)


def test_affine_graph_is_degenerate():
    g = CoxeterGraph(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3})
    assert det(gram_from_graph(g).rows()) == 0


def test_gram_validation():
    with pytest.raises(GeometryError):
        GramMatrix(((ONE, QSqrt5(0)), (QSqrt5(1), ONE)))
    with pytest.raises(GeometryError):
        GramMatrix(((QSqrt5(2),),))


def test_isomorphism_respects_labels():
    a = CoxeterGraph(3, {(0, 1): 5, (1, 2): 3})
    b = CoxeterGraph(3, {(2, 1): 5, (1, 0): 3})
    c = CoxeterGraph(3, {(0, 1): 4, (1, 2): 3})
    assert isomorphic(a, b)
    assert not isomorphic(a, c)
    assert isomorphic(builtin_graph("gamma-star"), builtin_graph("gamma-star"))
