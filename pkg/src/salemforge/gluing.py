"""Gluing of Coxeter polytopes along orthogonal facets and the domino family."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .coxeter import CoxeterGraph, builtin_graph, steinberg_growth
from .exactpoly import (
    L_FORM,
    M_FORM,
    N_FORM,
    ONE,
    AffineForm,
    IntPoly,
    ParamRatFunc,
    RatFunc,
    ratfunc_combine,
)

T_MINUS_1_OVER_T_PLUS_1 = RatFunc(IntPoly((-1, 1)), IntPoly((1, 1)))


class GluingError(ValueError):
    pass


def glue(w1: RatFunc, w2: RatFunc, f: RatFunc) -> RatFunc:
    """Growth function of P1 and P2 glued along a common orthogonal facet F."""
    for name, w in (("w1", w1), ("w2", w2), ("f", f)):
        if w.num.is_zero():
            raise GluingError(f"{name} is identically zero")
        if w.den[0] == 0 or w.num[0] == 0:
            raise GluingError(f"{name} is not a growth function (zero constant term)")
    inv = w1.inverse() + w2.inverse() + T_MINUS_1_OVER_T_PLUS_1 * f.inverse()
    if inv.num.is_zero():
        raise GluingError("combined reciprocal vanishes")
    return inv.inverse()


@dataclass(frozen=True)
class GluingCounts:
    l: int
    m: int
    n: int

    def __post_init__(self):
        ok, reason = validate_counts(self.l, self.m, self.n)
        if not ok:
            raise GluingError(f"invalid counts ({self.l},{self.m},{self.n}): {reason}")

    @property
    def c(self) -> int:
        """Number of gluings along type C facets."""
        return self.n - self.l - self.m

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.l, self.m, self.n)


def validate_counts(l: int, m: int, n: int) -> tuple[bool, str]:
    if min(l, m, n) < 0:
        return False, "counts must be nonnegative"
    if l + m > n:
        return False, f"l + m = {l + m} exceeds n = {n}"
    c = n - l - m
    cap = (n + 1) // 2 if n % 2 else n // 2
    if c > cap:
        return False, f"n - l - m = {c} exceeds {cap}"
    return True, "ok"


def valid_counts(n_max: int):
    """All valid (l, m, n) with n <= n_max in lexicographic (n, l, m) order."""
    for n in range(n_max + 1):
        for l in range(n + 1):
            for m in range(n - l + 1):
                if validate_counts(l, m, n)[0]:
                    yield (l, m, n)


# ---------------------------------------------------------------------------
# the base polytope and its orthogonal facets


@lru_cache(maxsize=1)
def base_growth() -> RatFunc:
    return steinberg_growth(builtin_graph("gamma-star"))


@dataclass(frozen=True)
class FacetClass:
    letter: str
    graph: CoxeterGraph
    deleted: tuple[int, ...]  # 0-based nodes of the simplex graph whose deletion gives this class
    growth: RatFunc

    @property
    def multiplicity(self) -> int:
        return len(self.deleted)


def _printed_facets(golden: dict | None = None) -> dict[str, RatFunc]:
    from .golden import load_golden, ratfunc_from_expr

    g = golden or load_golden()
    return {k: ratfunc_from_expr(g[f"facet_{k}"]) for k in "ABC"}


def group_facets(gamma: CoxeterGraph) -> list[tuple[CoxeterGraph, list[int], RatFunc]]:
    """Vertex-deleted subgraphs grouped into isomorphism classes."""
    from .geometry import isomorphic

    classes: list[tuple[CoxeterGraph, list[int], RatFunc]] = []
    for i in range(gamma.size):
        sub = gamma.delete(i)
        for rep, members, _ in classes:
            if isomorphic(rep, sub):
                members.append(i)
                break
        else:
            classes.append((sub, [i], steinberg_growth(sub)))
    return classes


def facet_classes(golden: dict | None = None) -> dict[str, FacetClass]:
    """Label the facet classes A, B, C by matching against the stored printed forms."""
    if golden is None:
        return _facet_classes_default()
    return _label_facets(_printed_facets(golden))


@lru_cache(maxsize=1)
def _facet_classes_default() -> dict[str, FacetClass]:
    return _label_facets(_printed_facets())


def _label_facets(printed: dict[str, RatFunc]) -> dict[str, FacetClass]:
    out: dict[str, FacetClass] = {}
    for graph, members, growth in group_facets(builtin_graph("gamma")):
        hits = [k for k, r in printed.items() if r == growth]
        if len(hits) != 1:
            raise GluingError(f"facet class {members} matches {hits or 'no'} printed growth function")
        out[hits[0]] = FacetClass(hits[0], graph, tuple(members), growth)
    if sorted(out) != ["A", "B", "C"]:
        raise GluingError(f"facet labels incomplete: {sorted(out)}")
    return out


def facet_growths() -> tuple[RatFunc, RatFunc, RatFunc]:
    fc = facet_classes()
    return fc["A"].growth, fc["B"].growth, fc["C"].growth


# ---------------------------------------------------------------------------
# the domino family


def domino_growth(counts: GluingCounts | tuple[int, int, int]) -> RatFunc:
    if not isinstance(counts, GluingCounts):
        counts = GluingCounts(*counts)
    return _domino_growth(counts.l, counts.m, counts.n)


@lru_cache(maxsize=4096)
def _domino_growth(l: int, m: int, n: int) -> RatFunc:
    W = base_growth()
    A, B, C = facet_growths()
    k = T_MINUS_1_OVER_T_PLUS_1
    inv = ratfunc_combine([
        (n + 1, W.inverse()),
        (l, k * A.inverse()),
        (m, k * B.inverse()),
        (n - l - m, k * C.inverse()),
    ])
    return inv.inverse()


@lru_cache(maxsize=1)
def domino_symbolic() -> ParamRatFunc:
    """W_{l,m,n} = P/Q as a rational function with affine coefficients."""
    W = base_growth()
    A, B, C = facet_growths()
    k = T_MINUS_1_OVER_T_PLUS_1
    inv = ratfunc_combine([
        (N_FORM + 1, W.inverse()),
        (L_FORM, k * A.inverse()),
        (M_FORM, k * B.inverse()),
        (N_FORM - L_FORM - M_FORM, k * C.inverse()),
    ])
    res = inv.inverse()
    # growth normalization: constant term of the denominator is +1
    d0 = res.den[0]
    if d0 == AffineForm(-1):
        res = ParamRatFunc(-res.num, -res.den)
    elif d0 != AffineForm(1):
        raise GluingError(f"unexpected denominator constant term {d0}")
    if not res.num.is_param_free():
        raise GluingError("numerator still depends on the counts; common factor not cancelled")
    return res


def symbolic_pq():
    """(P, Q) with P an IntPoly and Q a ParamPoly, both with constant term 1."""
    r = domino_symbolic()
    return r.num.to_intpoly(), r.den


def iterated_glue(sequence: str) -> RatFunc:
    """Glue copies of the base polytope one at a time along the facet types in ``sequence``."""
    W = base_growth()
    facets = dict(zip("ABC", facet_growths()))
    cur = W
    for letter in sequence:
        cur = glue(cur, W, facets[letter])
    return cur


def check_order_independence(n_max: int = 4) -> list[tuple[tuple[int, int, int], str]]:
    """Return (counts, order) pairs where iterated gluing disagrees with domino_growth."""
    bad = []
    for l, m, n in valid_counts(n_max):
        target = domino_growth((l, m, n))
        word = "A" * l + "B" * m + "C" * (n - l - m)
        for order in sorted(set(permutations(word))):
            if iterated_glue("".join(order)) != target:
                bad.append(((l, m, n), "".join(order)))
    return bad


__all__ = [
    "GluingCounts", "GluingError", "FacetClass", "glue", "validate_counts", "valid_counts",
    "base_growth", "facet_classes", "facet_growths", "domino_growth", "domino_symbolic",
    "symbolic_pq", "iterated_glue", "check_order_independence", "group_facets", "ONE",
]
