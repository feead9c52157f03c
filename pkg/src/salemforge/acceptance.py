"""Reproduction checks run by ``salemforge verify-paper`` and the acceptance tests."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import sympy

from . import certify, coxeter, geometry, gluing, golden, rootloc
from .exactpoly import AffineForm, IntPoly, RatFunc, bracket, cyclotomic


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    seconds: float = 0.0
    details: dict = field(default_factory=dict)
    error: str | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.number:2d} {self.name} ({self.seconds:.2f}s)"

    def to_dict(self) -> dict:
        d = {"number": self.number, "name": self.name, "ok": self.ok,
             "seconds": round(self.seconds, 3), "details": self.details}
        if self.error:
            d["error"] = self.error
        return d


def _timed(number: int, name: str, fn, *args, budget: float | None = None) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, details = fn(*args)
        err = None
    except Exception as exc:  # a crashing check is a failing check
        ok, details, err = False, {}, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if budget is not None:
        details["budget_seconds"] = budget
        if dt >= budget:
            ok = False
            details["over_budget"] = True
    return CheckResult(number, name, bool(ok), dt, details, err)


# ---------------------------------------------------------------------------
# individual checks


def check_01(g: dict):
    f = coxeter.steinberg_growth(coxeter.builtin_graph("triangle-2-3-7"))
    printed = RatFunc(golden.intpoly_from_expr(g["lehmer_growth_num"]),
                      golden.intpoly_from_expr(g["lehmer_growth_den"]))
    num, den = f.as_growth()
    L = golden.intpoly_from_expr(g["lehmer_growth_den"])
    rate = rootloc.growth_rate(den)
    ok = f == printed and den == L and abs(float(rate.mid) - float(g["lehmer_rate"])) < 1e-5
    return ok, {"numerator": num.to_text(), "denominator": den.to_text(),
                "alpha_L": rate.to_dict()}


def check_02(g: dict):
    star = coxeter.builtin_graph("gamma-star")
    census = coxeter.spherical_census(star)
    by_size: dict[str, dict[str, int]] = {}
    for br, cnt in census.items():
        if not br:
            continue
        by_size.setdefault(str(len(br)), {})[",".join(map(str, br))] = cnt
    W = gluing.base_growth()
    num, den = W.as_growth()
    P_ok = num == bracket(g["domino_P_brackets"])
    cyc = IntPoly.const(1)
    for i, e in g["domino_P_cyclotomic"].items():
        cyc = cyc * cyclotomic(int(i)) ** e
    Q = golden.intpoly_from_expr(g["domino_Q"])
    ok = by_size == g["domino_census"] and P_ok and num == cyc and den == Q
    return ok, {"census": by_size, "P_matches": P_ok, "Q": den.to_text(), "Q_matches": den == Q}


def check_03(g: dict):
    fc = gluing.facet_classes(g)
    mult = {k: v.multiplicity for k, v in fc.items()}
    printed = gluing._printed_facets(g)
    match = {k: fc[k].growth == printed[k] for k in "ABC"}
    ok = all(match.values()) and mult == g["facet_multiplicity"] and fc["C"].deleted == (4,)
    return ok, {"multiplicity": mult, "matches": match,
                "deleted_nodes": {k: [i + 1 for i in v.deleted] for k, v in fc.items()}}


def _random_counts(k: int, n_max: int, seed: int = 20240601):
    rng = random.Random(seed)
    out = []
    while len(out) < k:
        n = rng.randint(0, n_max)
        l = rng.randint(0, n)
        m = rng.randint(0, n - l)
        if gluing.validate_counts(l, m, n)[0]:
            out.append((l, m, n))
    return out


def check_04(g: dict):
    P, Q = gluing.symbolic_pq()
    printed_Q = golden.parampoly_from_expr(g["domino_Q_lmn"])
    coeff_ok = Q == printed_Q
    P_ok = P == bracket(g["domino_P_lmn_brackets"])
    bad_order = gluing.check_order_independence(4)
    sym = gluing.domino_symbolic()
    mism = []
    for l, m, n in _random_counts(200, 60):
        if sym.specialize(l, m, n) != gluing.domino_growth((l, m, n)):
            mism.append([l, m, n])
    mismatched_coeffs = [k for k in range(19) if Q[k] != printed_Q[k]]
    ok = coeff_ok and P_ok and not bad_order and not mism
    return ok, {"Q_matches": coeff_ok, "mismatched_coefficients": mismatched_coeffs,
                "P_matches": P_ok, "order_failures": [list(map(str, b)) for b in bad_order],
                "random_mismatches": mism}


def check_05(g: dict):
    K = certify.kempner_symbolic()
    printed = golden.parampoly_from_expr(g["kempner_K_lmn"], "u")
    k0 = certify.quarter(K[0])
    ok = K == printed and K.deg == 9 and K[9] == AffineForm(32, 0, 0, 32) \
        and k0 == golden.affine_from_expr(g["kempner_K_lmn_at_0_quarter"])
    return ok, {"coefficients": [str(c) for c in K.coeffs], "K0_quarter": str(k0)}


@lru_cache(maxsize=4)
def _family_scan(n_max: int):
    P, Q = gluing.symbolic_pq()
    rows = []
    for l, m, n in gluing.valid_counts(n_max):
        q = Q.specialize(l, m, n)
        prof = rootloc.root_profile(q)
        tau = rootloc.growth_rate(q)
        rows.append(((l, m, n), q, prof, tau))
    return rows


def check_06(g: dict, n_max: int = 30):
    rows = _family_scan(n_max)
    bad = [list(c) for c, _, p, _ in rows if (p.circle_pairs, p.real_pairs, p.unresolved) != (7, 2, 0)]
    return not bad, {"triples": len(rows), "n_max": n_max, "failures": bad[:20]}


def check_07(g: dict, n_max: int = 30):
    rows = _family_scan(n_max)
    bad_sandwich, bad_order = [], []
    half = Fraction(1, 2)
    for (l, m, n), q, prof, tau in rows:
        if not (4 * n + 5 < tau.lo and tau.hi < 4 * n + m + l + 6):
            bad_sandwich.append([l, m, n])
        if not (q.sign_at(0) > 0 and q.sign_at(half) < 0 and q.sign_at(1) > 0):
            bad_order.append([l, m, n])
    ok = not bad_sandwich and not bad_order
    sample = rows[-1]
    return ok, {"triples": len(rows), "sandwich_failures": bad_sandwich[:20],
                "ordering_failures": bad_order[:20],
                "example": {"counts": list(sample[0]), "tau": sample[3].to_dict()}}


def check_08(g: dict):
    L = golden.intpoly_from_expr(g["lehmer_growth_den"])
    D = golden.intpoly_from_expr(g["zehrt_den"])
    cl = rootloc.classify_salem(L)
    cd = rootloc.classify_salem(D)
    aL = float(g["lehmer_rate"])
    a, b = (float(x) for x in g["zehrt_rates"])
    ok = (cl.kind is rootloc.SalemKind.SALEM and len(cl.witnesses) == 1
          and abs(float(cl.witnesses[0].mid) - aL) < 1e-5
          and cd.kind is rootloc.SalemKind.TWO_SALEM and len(cd.witnesses) == 2
          and abs(float(cd.witnesses[0].mid) - a) < 1e-5
          and abs(float(cd.witnesses[1].mid) - b) < 1e-5)
    return ok, {"L": cl.to_dict(), "D": cd.to_dict()}


def check_09(g: dict, rounds: int = 64):
    D = golden.intpoly_from_expr(g["zehrt_den"])
    w = rootloc.cohn_check(D, bound=g["zehrt_cohn_n"], rounds=rounds)
    n0 = g["zehrt_cohn_n"]
    v186 = D(n0)
    printed = int(g["zehrt_cohn_value"])
    prime186 = rootloc.is_probable_prime(v186, rounds)
    ok = (w is not None and w.H == g["zehrt_cohn_H"] and w.n <= n0 and prime186
          and v186 == printed and str(v186).startswith("2008067839"))
    return ok, {"witness": w.to_dict() if w else None, "value_at_186": str(v186),
                "digits_at_186": len(str(v186)), "matches_printed": v186 == printed,
                "probable_prime_186": prime186, "rounds": rounds}


def _mpoly_to_sympy(p: certify.MPoly, names):
    syms = [sympy.Symbol(x) for x in names]
    l, m, n = golden.PARAMS
    expr = 0
    for e, c in p.terms.items():
        mono = 1
        for s, k in zip(syms, e):
            mono *= s**k
        expr += (c.c0 + c.cL * l + c.cM * m + c.cN * n) * mono
    return expr


def _substitution_lines_ok(g: dict) -> bool:
    s1 = certify.residual_system(1)
    subs = {}
    for k, text in enumerate(g["quadratic_substitution"], start=1):
        printed = golden.parse(text).subs(subs)
        ours = _mpoly_to_sympy(s1.substitutions[k - 1], ("a",))
        if sympy.expand(printed - ours) != 0:
            return False
        subs[sympy.Symbol(f"b{k}")] = ours
    s2 = certify.residual_system(2)
    first = golden.parse(g["quartic_first_substitution"])
    return sympy.expand(first - _mpoly_to_sympy(s2.substitutions[0], ("a", "b"))) == 0


def _compare_table(cells, printed) -> list[str]:
    diffs = []
    for cell, row in zip(cells, printed):
        tag = str(tuple(row["ab"]))
        if list(cell.ab) != row["ab"]:
            diffs.append(f"{tag}: class order")
            continue
        for key, val, mod in (("f", cell.f, cell.f_mod), ("g", cell.g, cell.g_mod)):
            if row[key] is None:
                continue
            want = golden.affine_from_expr(row[key])
            if (want.c0, want.cN) != val or want.cL or want.cM:
                diffs.append(f"{tag}: {key} {row[key]} vs {certify._lin_str(val)}")
            wm = golden.affine_from_expr(row[f"{key}_mod3"])
            if (wm.c0 - mod[0]) % 3 or (wm.cN - mod[1]) % 3:
                diffs.append(f"{tag}: {key} mod 3 {row[key + '_mod3']} vs {certify._lin_str(mod)}")
        if cell.verdict != row["verdict"]:
            diffs.append(f"{tag}: verdict {row['verdict']} vs {cell.verdict}")
    if len(cells) != len(printed):
        diffs.append("row count")
    return diffs


def check_10(g: dict):
    s1 = certify.residual_system(1)
    s2 = certify.residual_system(2)
    r1_ok = s1.residual[0].terms == golden.mpoly_terms(g["quadratic_residual"], ("a",))
    r2_ok = (s2.residual[0].terms == golden.mpoly_terms(g["quartic_residual_f"], ("a", "b"))
             and s2.residual[1].terms == golden.mpoly_terms(g["quartic_residual_g"], ("a", "b")))
    subs_ok = _substitution_lines_ok(g)
    consumed_ok = all(certify.residual_system(d).consumed == 9 - d
                      and len(certify.residual_system(d).residual) == d for d in (1, 2, 3, 4))
    t1 = _compare_table(certify.residue_tables("0nn"), g["residue_table_0nn"])
    t2 = _compare_table(certify.residue_tables("n0n"), g["residue_table_n0n"])
    rep = certify.verify_root_location_tables(g)
    f3 = rep.f_rows[[r.point for r in rep.f_rows].index("-3")]
    f2 = rep.f_rows[[r.point for r in rep.f_rows].index("-2")]
    vals_ok = (f3.value == str(golden.affine_from_expr(g["f_at_minus_3"]))
               and f2.value == str(golden.affine_from_expr(g["f_at_minus_2"])))
    ok = r1_ok and r2_ok and subs_ok and consumed_ok and not t1 and not t2 and rep.ok and vals_ok
    return ok, {"residual_d1": r1_ok, "residual_d2": r2_ok, "substitution_lines": subs_ok,
                "table1_diffs": t1, "table2_diffs": t2, "sign_tables": rep.to_dict(),
                "printed_values": vals_ok}


def check_11(g: dict):
    P, Q = gluing.symbolic_pq()
    irr = {}
    for n in (1, 4, 7, 10, 13):
        irr[f"0,{n},{n}"] = rootloc.is_irreducible(Q.specialize(0, n, n))
        irr[f"{n},0,{n}"] = rootloc.is_irreducible(Q.specialize(n, 0, n))
    mod3 = {f"{s},d={d}": certify.no_small_palindromic_factor(s, d).verdict
            for s in ("0nn", "n0n") for d in (2, 3, 4)}
    ok = all(irr.values()) and mod3["0nn,d=2"] == mod3["n0n,d=2"] == "no surviving class"
    return ok, {"irreducible": irr, "mod3": mod3}


def check_12(g: dict):
    v = geometry.verify_domino_geometry()
    return v.ok, v.to_dict()


def _rank_le4_graphs():
    """Connected-or-not Coxeter graphs on 1..4 nodes, labels in {2,3,5}, up to isomorphism."""
    seen: list[coxeter.CoxeterGraph] = []
    for k in range(1, 5):
        pairs = list(combinations(range(k), 2))
        for labs in product((2, 3, 5), repeat=len(pairs)):
            g = coxeter.CoxeterGraph(k, {p: x for p, x in zip(pairs, labs) if x != 2})
            if coxeter.finite_type(g) is None:
                continue
            if any(h.size == k and geometry.isomorphic(g, h) for h in seen):
                continue
            seen.append(g)
    return seen


def _reciprocal_pool():
    pool = [cyclotomic(i) for i in (3, 4, 5, 6, 8, 10, 12)]
    pool += [IntPoly((1, -3, 1)), IntPoly((1, 3, 1)), IntPoly((1, -4, 1)), IntPoly((1, 1, -1, 1, 1)),
             IntPoly((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))]
    return pool


def check_13(g: dict, products: int = 100):
    graphs = _rank_le4_graphs()
    bfs_bad = []
    for gr in graphs:
        if coxeter.bfs_growth_finite(gr) != coxeter.solomon_polynomial(coxeter.finite_type(gr)):
            bfs_bad.append(gr.to_text())
    funcs = {name: coxeter.steinberg_growth(coxeter.builtin_graph(name)) for name in coxeter.BUILTIN_NAMES}
    sizes = {name: coxeter.builtin_graph(name).size for name in coxeter.BUILTIN_NAMES}
    for c in ((0, 0, 0), (0, 1, 1), (3, 2, 7)):
        funcs[f"domino{c}"] = gluing.domino_growth(c)
        # each gluing drops the two glued facets and merges the four facets
        # orthogonal to them pairwise
        sizes[f"domino{c}"] = 10 + 4 * c[2]
    prefix_bad = []
    for name, f in funcs.items():
        s = coxeter.series_prefix(f, 100)
        if len(s) != 100 or s[0] != 1 or s[1] != sizes[name] or any(x < 0 for x in s):
            prefix_bad.append(name)
    rng = random.Random(13)
    pool = _reciprocal_pool()
    fact_bad = 0
    for _ in range(products):
        picks = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        f = IntPoly.const(1)
        for p in picks:
            f = f * p
        got = rootloc.factor_reciprocal(f)
        prod = IntPoly.const(1)
        for p in got:
            prod = prod * p
        if prod != f or sorted(got, key=lambda p: p.coeffs) != sorted(picks, key=lambda p: p.coeffs):
            fact_bad += 1
    ok = not bfs_bad and not prefix_bad and fact_bad == 0
    return ok, {"finite_graphs": len(graphs), "bfs_failures": bfs_bad, "prefix_failures": prefix_bad,
                "factor_products": products, "factor_failures": fact_bad}


CHECKS = [
    (1, "triangle-2-3-7 growth function and Lehmer denominator", check_01, 1.0),
    (2, "Gamma* census, P(t) and Q(t)", check_02, 5.0),
    (3, "facet growth functions A, B, C", check_03, None),
    (4, "symbolic domino closed forms and gluing agreement", check_04, None),
    (5, "Kempner transform of Q_lmn", check_05, None),
    (6, "root profile of Q_lmn for n <= 30", check_06, 600.0),
    (7, "growth-rate sandwich and root ordering", check_07, None),
    (8, "Salem and 2-Salem classification", check_08, None),
    (9, "Cohn criterion witness for D(t)", check_09, None),
    (10, "elimination systems, residue tables and sign tables", check_10, None),
    (11, "irreducibility for n = 1 (mod 3)", check_11, 120.0),
    (12, "Gram matrix geometry and compactness", check_12, 5.0),
    (13, "property suites", check_13, None),
]


def run_check(number: int, golden_data: dict | None = None, **kw) -> CheckResult:
    g = golden_data or golden.load_golden()
    num, name, fn, budget = CHECKS[number - 1]
    if kw:
        return _timed(num, name, lambda gg: fn(gg, **kw), g, budget=budget)
    return _timed(num, name, fn, g, budget=budget)


def verify_paper(golden_path=None, mr_rounds: int = 64) -> list[CheckResult]:
    g = golden.load_golden(golden_path)
    out = []
    for num, _, _, _ in CHECKS:
        kw = {"rounds": mr_rounds} if num == 9 else {}
        out.append(run_check(num, g, **kw))
    return out
