"""Gram-matrix geometry of the truncated 4-simplex, in exact Q(sqrt5) arithmetic.

No square root of a field element is ever formed: every comparison against
a square root is carried out on squares with explicit sign bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .coxeter import DOTTED, CoxeterGraph, Special, builtin_graph
from .qfield import NEG_COS, ONE, ZERO, QSqrt5

Matrix = list[list[QSqrt5]]


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[QSqrt5, ...], ...]

    def __post_init__(self):
        k = len(self.entries)
        for i in range(k):
            if len(self.entries[i]) != k:
                raise GeometryError("Gram matrix must be square")
            if self.entries[i][i] != ONE:
                raise GeometryError("Gram matrix diagonal must be 1")
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise GeometryError("Gram matrix must be symmetric")

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def principal(self, idx) -> GramMatrix:
        idx = list(idx)
        return GramMatrix(tuple(tuple(self.entries[i][j] for j in idx) for i in idx))


def gram_from_graph(g: CoxeterGraph) -> GramMatrix:
    rows = []
    for i in range(g.size):
        row = []
        for j in range(g.size):
            if i == j:
                row.append(ONE)
                continue
            lab = g.label(i, j)
            if isinstance(lab, Special) or lab not in NEG_COS:
                raise GeometryError(f"label {lab!r} between {i + 1} and {j + 1} is outside Q(sqrt5)")
            row.append(NEG_COS[lab])
        rows.append(tuple(row))
    return GramMatrix(tuple(rows))


def det(m: Matrix | GramMatrix) -> QSqrt5:
    """Determinant by Gaussian elimination over the field."""
    if isinstance(m, GramMatrix):
        m = m.entries
    a = [list(r) for r in m]
    k = len(a)
    out = ONE
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] != ZERO), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out = out * a[c][c]
        inv = ONE / a[c][c]
        for r in range(c + 1, k):
            if a[r][c] != ZERO:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return out


def rank(vectors: list[list[QSqrt5]]) -> int:
    a = [list(v) for v in vectors]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != ZERO), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        for i in range(len(a)):
            if i != r and a[i][c] != ZERO:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def leading_minors(G: GramMatrix) -> list[QSqrt5]:
    return [det(G.principal(range(k))) for k in range(1, G.order + 1)]


def signature(G: GramMatrix) -> tuple[int, int]:
    """(positives, negatives) by sign changes in 1, M_1, ..., M_k (Jacobi)."""
    minors = leading_minors(G)
    signs = [1]
    for k, mk in enumerate(minors, start=1):
        s = mk.sign()
        if s == 0:
            raise GeometryError(f"leading minor of order {k} vanishes")
        signs.append(s)
    neg = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return G.order - neg, neg


def cofactor(G: GramMatrix, i: int, j: int) -> QSqrt5:
    k = G.order
    rows = [[G[r, c] for c in range(k) if c != j] for r in range(k) if r != i]
    minor = det(rows)
    return minor if (i + j) % 2 == 0 else -minor


def cofactor_matrix(G: GramMatrix) -> Matrix:
    return [[cofactor(G, i, j) for j in range(G.order)] for i in range(G.order)]


def inner(G: GramMatrix, x, y) -> QSqrt5:
    """x . y for coordinate vectors in the basis e_1..e_k."""
    k = G.order
    acc = ZERO
    for i in range(k):
        if x[i] == ZERO:
            continue
        row = ZERO
        for j in range(k):
            if y[j] != ZERO and G[i, j] != ZERO:
                row = row + G[i, j] * y[j]
        acc = acc + x[i] * row
    return acc


def basis_vector(k: int, i: int) -> list[QSqrt5]:
    return [ONE if j == i else ZERO for j in range(k)]


def cofactor_normals(G: GramMatrix) -> list[list[QSqrt5]]:
    """w_i = sum_k cof_ik(G) e_k, as coordinate vectors."""
    d = det(G.rows())
    if d == ZERO:
        raise GeometryError("singular Gram matrix")
    return cofactor_matrix(G)


@dataclass
class TruncationReport:
    det: QSqrt5
    cofactors: Matrix
    opposite_disjoint: dict[int, bool] = field(default_factory=dict)   # v_i . e_i < -1
    mutual_disjoint: dict[tuple[int, int], bool] = field(default_factory=dict)  # v_i . v_j < -1
    orthogonal: dict[tuple[int, int], bool] = field(default_factory=dict)  # v_i . e_j = 0

    @property
    def ok(self) -> bool:
        return (all(self.opposite_disjoint.values()) and all(self.mutual_disjoint.values())
                and all(self.orthogonal.values()))


def truncation_extend(G: GramMatrix) -> tuple[CoxeterGraph, TruncationReport]:
    """Check that the orthogonal truncations at all vertices are disjoint from
    the opposite facets and from each other, and emit the resulting graph.

    Nodes 0..k-1 are the original facets, node k+i the facet truncating the
    vertex opposite facet i.
    """
    k = G.order
    if signature(G) != (k - 1, 1):
        raise GeometryError("Gram matrix is not Lorentzian")
    d = det(G.rows())
    cof = cofactor_matrix(G)
    rep = TruncationReport(det=d, cofactors=cof)
    for i in range(k):
        cii = cof[i][i]
        # ultraideal vertex: w_i . w_i = cof_ii * det > 0
        if (cii * d).sign() <= 0:
            raise GeometryError(f"vertex {i + 1} is not ultraideal")
        # v_i . e_i = -sqrt(det / cof_ii) < -1  <=>  det / cof_ii > 1
        rep.opposite_disjoint[i] = (d / cii - ONE).sign() > 0
        for j in range(k):
            if j != i:
                rep.orthogonal[(i, j)] = inner(G, cof[i], basis_vector(k, j)) == ZERO
    for i, j in combinations(range(k), 2):
        cij = cof[i][j]
        # v_i . v_j = -cof_ij / sqrt(cof_ii cof_jj) < -1
        rep.mutual_disjoint[(i, j)] = cij.sign() > 0 and (cij * cij - cof[i][i] * cof[j][j]).sign() > 0
    if not rep.ok:
        raise GeometryError("truncation is not orthogonal and disjoint")
    labels = {}
    for i in range(k):
        for j in range(i + 1, k):
            lab = G[i, j]
            for m, val in NEG_COS.items():
                if val == lab and m > 2:
                    labels[(i, j)] = m
    for i in range(k):
        labels[(k + i, i)] = DOTTED
        for j in range(i + 1, k):
            labels[(k + i, k + j)] = DOTTED
    return CoxeterGraph(2 * k, labels), rep


def facet_vectors(G: GramMatrix) -> list[list[QSqrt5]]:
    """Normal vectors of the truncated polytope: e_0..e_{k-1}, then w_0..w_{k-1}."""
    k = G.order
    return [basis_vector(k, i) for i in range(k)] + cofactor_normals(G)


def neighbourhood(star: CoxeterGraph, J) -> list[int]:
    """J together with every node orthogonal (label 2) to all of J."""
    J = list(J)
    rest = [v for v in range(star.size) if v not in J and all(star.label(v, j) == 2 for j in J)]
    return sorted(J + rest)


def lanner_subsets(G: GramMatrix) -> list[tuple[int, ...]]:
    k = G.order
    return [J for J in combinations(range(k), k - 1) if signature(G.principal(J)) == (k - 2, 1)]


def dotted_pairs(star: CoxeterGraph) -> list[tuple[int, int]]:
    return [(i, j) for i, j, lab in star.edges() if lab is DOTTED]


@dataclass
class CompactnessReport:
    rank_by_subset: dict[tuple[int, ...], int]
    elliptic_edges: int
    edge_extensions_ok: bool

    def passed(self, subsets) -> bool:
        return all(self.rank_by_subset[J] == 5 for J in subsets)


def compactness_report(G: GramMatrix, star: CoxeterGraph) -> CompactnessReport:
    vecs = facet_vectors(G)
    ranks = {}
    for J in lanner_subsets(G) + dotted_pairs(star):
        N = neighbourhood(star, J)
        ranks[tuple(J)] = rank([vecs[v] for v in N])
    ok, edges = _edge_extension_check(star, G.order - 1)
    return CompactnessReport(ranks, edges, ok)


def _edge_extension_check(star: CoxeterGraph, dim: int) -> tuple[bool, int]:
    """Every elliptic subset of rank dim-1 extends to exactly two elliptic
    subsets of rank dim, and at least one of rank dim exists."""
    from .coxeter import finite_subsets

    finite = {s for s, _ in finite_subsets(star)}
    top = [s for s in finite if len(s) == dim]
    edges = [s for s in finite if len(s) == dim - 1]
    for e in edges:
        ext = sum(1 for v in range(star.size) if v not in e and tuple(sorted(e + (v,))) in finite)
        if ext != 2:
            return False, len(edges)
    return bool(top), len(edges)


def compactness_check(G: GramMatrix, star: CoxeterGraph) -> bool:
    """Compactness of the truncated polytope.

    The span test runs over the Lannér subsets of the base simplex and the
    dotted pairs between truncating facets; a dotted pair (v_i, e_i) only
    ever has four candidate normals, so it is reported but not required.
    The elliptic edge-extension count must also hold.
    """
    rep = compactness_report(G, star)
    k = G.order
    required = [J for J in rep.rank_by_subset if not (len(J) == 2 and min(J) < k)]
    return rep.passed(required) and rep.edge_extensions_ok


def facet_subgraphs(gamma: CoxeterGraph) -> list[CoxeterGraph]:
    out = []
    G = gram_from_graph(gamma)
    for i in range(gamma.size):
        sub = gamma.delete(i)
        if signature(G.principal([j for j in range(gamma.size) if j != i])) != (gamma.size - 2, 1):
            raise GeometryError(f"facet {i + 1} does not have a Lorentzian Gram matrix")
        out.append(sub)
    return out


def _nx_graph(g: CoxeterGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.size))
    for i, j, lab in g.edges():
        h.add_edge(i, j, label=str(lab))
    return h


def isomorphic(g1: CoxeterGraph, g2: CoxeterGraph) -> bool:
    return nx.is_isomorphic(_nx_graph(g1), _nx_graph(g2),
                            edge_match=lambda a, b: a["label"] == b["label"])


@dataclass
class GeometryVerification:
    signature: tuple[int, int]
    det_negative: bool
    truncation: TruncationReport
    compact: bool
    compactness: CompactnessReport
    star_matches_builtin: bool

    @property
    def ok(self) -> bool:
        return (self.signature == (4, 1) and self.det_negative and self.truncation.ok
                and self.compact and self.star_matches_builtin)

    def to_dict(self) -> dict:
        return {
            "signature": list(self.signature),
            "det": str(self.truncation.det),
            "opposite_disjoint": {str(i + 1): v for i, v in self.truncation.opposite_disjoint.items()},
            "mutual_disjoint": {f"{i + 1},{j + 1}": v for (i, j), v in self.truncation.mutual_disjoint.items()},
            "compact": self.compact,
            "span_rank": {",".join(str(v + 1) for v in J): r
                          for J, r in self.compactness.rank_by_subset.items()},
            "elliptic_edges": self.compactness.elliptic_edges,
            "edge_extensions_ok": self.compactness.edge_extensions_ok,
            "star_matches_builtin": self.star_matches_builtin,
            "ok": self.ok,
        }


def verify_domino_geometry() -> GeometryVerification:
    gamma = builtin_graph("gamma")
    G = gram_from_graph(gamma)
    sig = signature(G)
    star, rep = truncation_extend(G)
    crep = compactness_report(G, star)
    return GeometryVerification(
        signature=sig,
        det_negative=det(G.rows()).sign() < 0,
        truncation=rep,
        compact=compactness_check(G, star),
        compactness=crep,
        star_matches_builtin=isomorphic(star, builtin_graph("gamma-star")),
    )
