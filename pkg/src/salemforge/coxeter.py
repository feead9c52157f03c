"""Coxeter graphs, finite-type recognition, Solomon and Steinberg growth
series, and a breadth-first enumeration oracle for finite groups."""
from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .exactpoly import ONE, IntPoly, RatFunc, bracket, ratfunc_combine, reciprocal_transform

MAX_NODES = 24
DEFAULT_BFS_CAP = 20000


class Special(enum.Enum):
    INFINITY = "inf"
    DOTTED = "dotted"

    def __repr__(self):
        return f"Special.{self.name}"


INFINITY = Special.INFINITY
DOTTED = Special.DOTTED
Label = "int | Special"


class GraphError(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


class CoxeterGraph:
    """Labeled graph on nodes 0..size-1. Absent pairs carry label 2."""

    __slots__ = ("size", "_labels")

    def __init__(self, size: int, labels: Mapping[tuple[int, int], int | Special] | None = None):
        if size < 0 or size > MAX_NODES:
            raise GraphError(f"node count {size} outside 0..{MAX_NODES}")
        table: dict[frozenset, int | Special] = {}
        for (i, j), lab in (labels or {}).items():
            if i == j:
                raise GraphError(f"self pair ({i}, {j})")
            if not (0 <= i < size and 0 <= j < size):
                raise GraphError(f"node index out of range in ({i}, {j})")
            key = frozenset((i, j))
            if key in table:
                raise GraphError(f"duplicate edge ({i}, {j})")
            if isinstance(lab, Special):
                table[key] = lab
            elif isinstance(lab, int):
                if lab < 2:
                    raise GraphError(f"label {lab} < 2")
                if lab > 2:
                    table[key] = lab
            else:
                raise GraphError(f"bad label {lab!r}")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "_labels", table)

    def __setattr__(self, name, value):
        raise AttributeError("CoxeterGraph is immutable")

    def label(self, i: int, j: int) -> int | Special:
        if i == j:
            return 1
        return self._labels.get(frozenset((i, j)), 2)

    def edges(self) -> list[tuple[int, int, int | Special]]:
        out = []
        for key, lab in self._labels.items():
            i, j = sorted(key)
            out.append((i, j, lab))
        return sorted(out, key=lambda e: (e[0], e[1]))

    def induced(self, nodes: Iterable[int]) -> CoxeterGraph:
        nodes = list(nodes)
        index = {v: k for k, v in enumerate(nodes)}
        labels = {}
        for i, j, lab in self.edges():
            if i in index and j in index:
                labels[(index[i], index[j])] = lab
        return CoxeterGraph(len(nodes), labels)

    def delete(self, node: int) -> CoxeterGraph:
        return self.induced(v for v in range(self.size) if v != node)

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.size == other.size and self._labels == other._labels

    def __hash__(self):
        return hash((self.size, frozenset(self._labels.items())))

    def __repr__(self):
        return f"CoxeterGraph({self.size}, {self.edges()})"

    def to_text(self) -> str:
        lines = [f"nodes {self.size}"]
        for i, j, lab in self.edges():
            if lab is INFINITY:
                lines.append(f"inf {i + 1} {j + 1}")
            elif lab is DOTTED:
                lines.append(f"dotted {i + 1} {j + 1}")
            else:
                lines.append(f"edge {i + 1} {j + 1} {lab}")
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the line-oriented graph format (``/`` also separates directives)."""
    size = None
    labels: dict[tuple[int, int], int | Special] = {}
    seen: set[frozenset] = set()
    directives = [d.strip() for line in text.splitlines()
                  for d in line.split("#", 1)[0].split("/")]
    for d in directives:
        if not d or d.startswith("#"):
            continue
        toks = d.split()
        kind = toks[0]
        if kind == "nodes":
            if size is not None or len(toks) != 2:
                raise GraphError(f"bad nodes directive: {d!r}")
            size = int(toks[1])
            continue
        if size is None:
            raise GraphError("'nodes' must come first")
        if kind == "edge":
            if len(toks) != 4:
                raise GraphError(f"bad edge directive: {d!r}")
            lab: int | Special = int(toks[3])
            if lab < 3:
                raise GraphError(f"edge label must be >= 3: {d!r}")
        elif kind in ("inf", "dotted"):
            if len(toks) != 3:
                raise GraphError(f"bad {kind} directive: {d!r}")
            lab = INFINITY if kind == "inf" else DOTTED
        else:
            raise GraphError(f"unknown directive {kind!r}")
        i, j = int(toks[1]) - 1, int(toks[2]) - 1
        if not (0 <= i < size and 0 <= j < size) or i == j:
            raise GraphError(f"node index out of range: {d!r}")
        key = frozenset((i, j))
        if key in seen:
            raise GraphError(f"duplicate edge: {d!r}")
        seen.add(key)
        labels[(i, j)] = lab
    if size is None:
        raise GraphError("missing 'nodes' directive")
    return CoxeterGraph(size, labels)


# ---------------------------------------------------------------------------
# finite types

_E_EXPONENTS = {
    6: (1, 4, 5, 7, 8, 11),
    7: (1, 5, 7, 9, 11, 13, 17),
    8: (1, 7, 11, 13, 17, 19, 23, 29),
}


@dataclass(frozen=True)
class Component:
    family: str  # "A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2(m)"
    rank: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class FiniteType:
    components: tuple[Component, ...]

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(e for c in self.components for e in c.exponents))

    @property
    def brackets(self) -> tuple[int, ...]:
        return tuple(e + 1 for e in self.exponents)

    def order(self) -> int:
        out = 1
        for b in self.brackets:
            out *= b
        return out

    def __str__(self):
        if not self.components:
            return "trivial"
        return " x ".join(
            c.family if c.family[0] in "EFHI" else f"{c.family}{c.rank}" for c in self.components
        )


def _component(g: CoxeterGraph, nodes: list[int]) -> Component | None:
    k = len(nodes)
    if k == 1:
        return Component("A", 1, (1,))
    edges = []
    for i, j in combinations(nodes, 2):
        lab = g.label(i, j)
        if isinstance(lab, Special):
            return None
        if lab > 2:
            edges.append((i, j, lab))
    if len(edges) != k - 1:
        return None  # connected with a cycle
    if k == 2:
        m = edges[0][2]
        if m == 3:
            return Component("A", 2, (1, 2))
        if m == 4:
            return Component("B", 2, (1, 3))
        return Component(f"I2({m})", 2, (1, m - 1))
    big = [e for e in edges if e[2] > 3]
    if len(big) > 1 or any(e[2] > 5 for e in big):
        return None
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    for i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    branch = [v for v in nodes if len(adj[v]) >= 3]
    if branch:
        if big or len(branch) > 1 or len(adj[branch[0]]) > 3:
            return None
        c = branch[0]
        arms = []
        for start in adj[c]:
            length, prev, cur = 1, c, start
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return Component("D", k, tuple(sorted(list(range(1, 2 * k - 2, 2)) + [k - 1])))
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return Component(f"E{k}", k, _E_EXPONENTS[k])
        return None
    # a path: order the nodes from one end
    ends = [v for v in nodes if len(adj[v]) == 1]
    order = [ends[0]]
    while len(order) < k:
        nxt = [w for w in adj[order[-1]] if w not in order]
        order.append(nxt[0])
    if not big:
        return Component("A", k, tuple(range(1, k + 1)))
    i, j, m = big[0]
    pos = min(order.index(i), order.index(j))  # edge between order[pos], order[pos+1]
    at_end = pos == 0 or pos == k - 2
    if m == 4:
        if at_end:
            return Component("B", k, tuple(range(1, 2 * k, 2)))
        if k == 4:
            return Component("F4", 4, (1, 5, 7, 11))
        return None
    if m == 5 and at_end:
        if k == 3:
            return Component("H3", 3, (1, 5, 9))
        if k == 4:
            return Component("H4", 4, (1, 11, 19, 29))
    return None


def connected_components(g: CoxeterGraph, subset: Iterable[int]) -> list[list[int]]:
    subset = sorted(set(subset))
    left = set(subset)
    comps = []
    while left:
        start = min(left)
        comp, stack = [], [start]
        left.discard(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in list(left):
                if g.label(v, w) != 2:
                    left.discard(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def finite_type(g: CoxeterGraph, subset: Iterable[int] | None = None) -> FiniteType | None:
    """Finite type of the parabolic subgroup on ``subset``, or None if infinite."""
    nodes = range(g.size) if subset is None else subset
    nodes = list(nodes)
    for v in nodes:
        if not 0 <= v < g.size:
            raise GraphError(f"node {v} out of range")
    comps = []
    for comp in connected_components(g, nodes):
        c = _component(g, comp)
        if c is None:
            return None
        comps.append(c)
    comps.sort(key=lambda c: (c.rank, c.family, c.exponents))
    return FiniteType(tuple(comps))


def solomon_polynomial(ft: FiniteType) -> IntPoly:
    return bracket(ft.brackets)


def finite_subsets(g: CoxeterGraph) -> list[tuple[tuple[int, ...], FiniteType]]:
    """All subsets spanning a finite parabolic subgroup.

    Supersets of an infinite subset are infinite, so the search only extends
    finite subsets.
    """
    out = [((), FiniteType(()))]
    frontier = [()]
    while frontier:
        nxt = []
        for s in frontier:
            start = s[-1] + 1 if s else 0
            for v in range(start, g.size):
                cand = s + (v,)
                ft = finite_type(g, cand)
                if ft is not None:
                    out.append((cand, ft))
                    nxt.append(cand)
        frontier = nxt
    return out


def spherical_census(g: CoxeterGraph) -> dict[tuple[int, ...], int]:
    """Count finite subsets by their sorted bracket signature."""
    tally: Counter = Counter()
    for subset, ft in finite_subsets(g):
        tally[ft.brackets] += 1
    return dict(tally)


def steinberg_growth(g: CoxeterGraph) -> RatFunc:
    """Growth function of the Coxeter group of ``g`` as a reduced RatFunc."""
    whole = finite_type(g)
    if whole is not None:
        return RatFunc(solomon_polynomial(whole))
    terms = []
    for brackets, count in sorted(spherical_census(g).items()):
        sign = -1 if len(brackets) % 2 else 1
        terms.append((sign * count, RatFunc(ONE, bracket(brackets))))
    inv = ratfunc_combine(terms)  # 1 / f(1/t)
    n = max(inv.num.deg, inv.den.deg)
    p = reciprocal_transform(inv.den, n)
    q = reciprocal_transform(inv.num, n)
    return RatFunc(p, q)


def series_prefix(f: RatFunc, k: int) -> list[int]:
    """First k Taylor coefficients of f at t = 0."""
    d0 = f.den[0]
    if d0 not in (1, -1):
        raise ValueError(f"den(0) = {d0} is not +-1")
    out: list[int] = []
    for i in range(k):
        acc = f.num[i]
        for j in range(1, min(i, f.den.deg) + 1):
            acc -= f.den[j] * out[i - j]
        out.append(acc * d0)
    return out


# ---------------------------------------------------------------------------
# BFS oracle over Z[phi], phi = (1 + sqrt5)/2


def _phi_mul(x: tuple[int, int]) -> tuple[int, int]:
    a, b = x
    return (b, a + b)


def bfs_growth_finite(g: CoxeterGraph, cap: int = DEFAULT_BFS_CAP) -> IntPoly:
    """Word-length generating polynomial by enumerating the group.

    The group acts on the orbit of a point in the open fundamental chamber; in
    the coordinates y_i = B(e_i, x) the chamber point is (1, ..., 1) and the
    reflection s_j maps y_i to y_i - 2 B(e_i, e_j) y_j.
    """
    k = g.size
    for i, j, lab in g.edges():
        if lab not in (3, 5):
            raise GraphError(f"label {lab!r} unsupported by the exact oracle")
    # neighbours[j] = [(i, label)] with label 3 or 5
    neighbours: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for i, j, lab in g.edges():
        neighbours[i].append((j, lab))
        neighbours[j].append((i, lab))

    def reflect(y, j):
        yj = y[j]
        out = list(y)
        out[j] = (-yj[0], -yj[1])
        for i, lab in neighbours[j]:
            add = yj if lab == 3 else _phi_mul(yj)
            out[i] = (y[i][0] + add[0], y[i][1] + add[1])
        return tuple(out)

    start = tuple((1, 0) for _ in range(k))
    dist = {start: 0}
    queue = deque([start])
    counts = [1]
    while queue:
        y = queue.popleft()
        d = dist[y]
        for j in range(k):
            z = reflect(y, j)
            if z not in dist:
                dist[z] = d + 1
                if len(dist) > cap:
                    raise GroupTooLarge(f"group order exceeds cap {cap}")
                if d + 1 == len(counts):
                    counts.append(0)
                counts[d + 1] += 1
                queue.append(z)
    return IntPoly(counts)


# ---------------------------------------------------------------------------
# named graphs

def _gamma() -> CoxeterGraph:
    return CoxeterGraph(5, {(0, 1): 5, (0, 3): 3, (1, 2): 3, (1, 4): 3, (2, 3): 5, (3, 4): 3})


def truncated_graph(base: CoxeterGraph) -> CoxeterGraph:
    """Graph after replacing every vertex of a simplex by an orthogonal facet.

    Node base.size + i is the facet cutting off the vertex opposite node i; it
    is orthogonal to every other original facet, and disjoint from facet i and
    from all the other new facets.
    """
    k = base.size
    labels = {(i, j): lab for i, j, lab in base.edges()}
    for i in range(k):
        labels[(k + i, i)] = DOTTED
        for j in range(i + 1, k):
            labels[(k + i, k + j)] = DOTTED
    return CoxeterGraph(2 * k, labels)


def builtin_graph(name: str) -> CoxeterGraph:
    if name == "triangle-2-3-7":
        return CoxeterGraph(3, {(0, 1): 3, (1, 2): 7})
    if name == "gamma":
        return _gamma()
    if name == "gamma-star":
        return truncated_graph(_gamma())
    if name in ("facet-A", "facet-B", "facet-C"):
        from .gluing import facet_classes

        return facet_classes()[name[-1]].graph
    raise KeyError(f"unknown builtin graph {name!r}")


BUILTIN_NAMES = ("triangle-2-3-7", "gamma", "gamma-star", "facet-A", "facet-B", "facet-C")
