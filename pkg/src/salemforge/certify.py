"""Proof artifacts for the domino denominators: elimination systems for
palindromic factors, sign certificates over the admissible count region, and
residue tables modulo 3."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .exactpoly import AffineForm, IntPoly, ParamPoly

UNKNOWNS = ("a", "b", "c", "d")
AB_CLASSES = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1))


class CertifyError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# polynomials in a few unknowns with affine coefficients


class MPoly:
    """Sparse polynomial in ``nvars`` unknowns with AffineForm coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def const(cls, nvars: int, c) -> MPoly:
        c = c if isinstance(c, AffineForm) else AffineForm(c)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> MPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): AffineForm(1)})

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"MPoly({self.nvars}, {len(self.terms)} terms)"

    def __add__(self, other: MPoly) -> MPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(self.nvars, out)

    def __neg__(self) -> MPoly:
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MPoly) -> MPoly:
        return self + (-other)

    def __mul__(self, other: MPoly) -> MPoly:
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return MPoly(self.nvars, out)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def at(self, point) -> AffineForm:
        """Substitute integers for the unknowns."""
        acc = AffineForm()
        for e, c in self.terms.items():
            w = 1
            for x, k in zip(point, e):
                w *= x**k
            acc = acc + c * w
        return acc

    def univariate(self) -> list[AffineForm]:
        """Ascending coefficient list when nvars == 1."""
        if self.nvars != 1:
            raise CertifyError("not univariate")
        out = [AffineForm()] * (self.degree + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out


# ---------------------------------------------------------------------------
# elimination systems


@dataclass
class ElimSystem:
    factor_degree: int
    unknowns: tuple[str, ...]
    substitutions: list[MPoly]  # cofactor coefficients c_1 .. c_e
    residual: list[MPoly]

    @property
    def consumed(self) -> int:
        return len(self.substitutions)


def _symbolic_q() -> ParamPoly:
    from .gluing import symbolic_pq

    return symbolic_pq()[1]


@lru_cache(maxsize=8)
def residual_system(d: int) -> ElimSystem:
    """Equate Q_{l,m,n} with (monic palindromic factor of degree 2d) times a
    monic palindromic cofactor and eliminate the cofactor coefficients."""
    if d not in (1, 2, 3, 4):
        raise CertifyError("factor half-degree must be 1, 2, 3 or 4")
    Q = _symbolic_q()
    if Q.deg != 18:
        raise CertifyError("expected a degree 18 denominator")
    nv = d
    one = MPoly.const(nv, 1)
    F = [one] + [MPoly.var(nv, i) for i in range(d)]
    F = F + F[-2::-1]  # palindromic: F_{2d-k} = F_k
    e = 9 - d
    C = [one]
    for k in range(1, e + 1):
        acc = MPoly.const(nv, Q[k])
        for j in range(1, min(k, 2 * d) + 1):
            acc = acc - F[j] * C[k - j]
        C.append(acc)

    def cof(i: int) -> MPoly:
        return C[i] if i <= e else C[2 * e - i]

    residual = []
    for k in range(e + 1, 10):
        acc = MPoly.const(nv, -Q[k])
        for j in range(0, min(k, 2 * d) + 1):
            acc = acc + F[j] * cof(k - j)
        residual.append(acc)
    return ElimSystem(2 * d, UNKNOWNS[:d], C[1:], residual)


# ---------------------------------------------------------------------------
# sign certificates


PARITIES = ("n-even", "n-odd")


def region_constraints(parity: str, n0: int = 0) -> list[tuple[int, int, int, int]]:
    """Rows (al, am, an, b) meaning al*l + am*m + an*n + b >= 0."""
    c = {"n-even": 0, "n-odd": 1}[parity]
    rows = [(1, 0, 0, 0), (0, 1, 0, 0), (-1, -1, 1, 0), (2, 2, -1, c)]
    if n0 > 0:
        rows.append((0, 0, 1, -n0))
    return rows


def _solve3(rows) -> tuple[Fraction, ...] | None:
    A = [[Fraction(x) for x in r[:3]] for r in rows]
    rhs = [Fraction(-r[3]) for r in rows]

    def det3(M):
        return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))

    D = det3(A)
    if D == 0:
        return None
    out = []
    for col in range(3):
        M = [row[:] for row in A]
        for i in range(3):
            M[i][col] = rhs[i]
        out.append(det3(M) / D)
    return tuple(out)


def _feasible(x, rows, homogeneous=False) -> bool:
    return all(r[0] * x[0] + r[1] * x[1] + r[2] * x[2] + (0 if homogeneous else r[3]) >= 0 for r in rows)


def vertices(rows) -> list[tuple[Fraction, ...]]:
    out = []
    for trip in combinations(rows, 3):
        x = _solve3(trip)
        if x is not None and _feasible(x, rows) and x not in out:
            out.append(x)
    return sorted(out)


def extreme_rays(rows) -> list[tuple[int, ...]]:
    out = []
    for r1, r2 in combinations(rows, 2):
        a, b = r1[:3], r2[:3]
        d = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
        if d == (0, 0, 0):
            continue
        g = math.gcd(*d)
        d = tuple(x // g for x in d)
        for v in (d, tuple(-x for x in d)):
            if _feasible(v, rows, homogeneous=True) and v not in out:
                out.append(v)
    return sorted(out)


@dataclass
class SignCertificate:
    expression: AffineForm
    parity: str
    n0: int
    verdict: str | None  # "positive", "negative" or None
    vertex_values: list[tuple[tuple[Fraction, ...], Fraction]] = field(default_factory=list)
    ray_values: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    parts: list[SignCertificate] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict is not None

    def to_dict(self) -> dict:
        d = {"expression": str(self.expression), "parity": self.parity, "n0": self.n0,
             "verdict": self.verdict or "no certificate"}
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        else:
            d["vertices"] = [{"point": [str(x) for x in v], "value": str(val)} for v, val in self.vertex_values]
            d["rays"] = [{"direction": list(r), "value": val} for r, val in self.ray_values]
        return d


def _affine_at(expr: AffineForm, x) -> Fraction:
    return expr.c0 + expr.cL * x[0] + expr.cM * x[1] + expr.cN * x[2]


def sign_certificate(expr: AffineForm, parity: str = "both", n0: int = 0) -> SignCertificate:
    """Strict sign of an affine form over the admissible (l, m, n) region."""
    if parity == "both":
        parts = [sign_certificate(expr, p, n0) for p in PARITIES]
        verdicts = {p.verdict for p in parts}
        verdict = parts[0].verdict if len(verdicts) == 1 else None
        return SignCertificate(expr, "both", n0, verdict, parts=parts)
    rows = region_constraints(parity, n0)
    vs = vertices(rows)
    if not vs:
        return SignCertificate(expr, parity, n0, None)
    vvals = [(v, _affine_at(expr, v)) for v in vs]
    rvals = []
    for r in extreme_rays(rows):
        rvals.append((r, expr.cL * r[0] + expr.cM * r[1] + expr.cN * r[2]))
    verdict = None
    if all(val > 0 for _, val in vvals) and all(val >= 0 for _, val in rvals):
        verdict = "positive"
    elif all(val < 0 for _, val in vvals) and all(val <= 0 for _, val in rvals):
        verdict = "negative"
    return SignCertificate(expr, parity, n0, verdict, vvals, rvals)


# values that are polynomial in n but affine in (l, m)


@dataclass(frozen=True)
class NPolyForm:
    """V0(n) + l*VL(n) + m*VM(n) with integer polynomials in n."""

    v0: IntPoly
    vl: IntPoly
    vm: IntPoly

    def __call__(self, l, m, n):
        return self.v0(n) + l * self.vl(n) + m * self.vm(n)

    def __str__(self):
        return f"({self.v0})[n] + l*({self.vl})[n] + m*({self.vm})[n]"


def _shift(p: IntPoly, k0: int) -> IntPoly:
    out = IntPoly()
    base = IntPoly((k0, 1))
    for c in reversed(p.coeffs):
        out = out * base + IntPoly.const(c)
    return out


def _univariate_sign_for_naturals(p: IntPoly, max_shift: int = 256) -> tuple[str | None, int]:
    """Strict sign of p(k) for all integers k >= 0, with the shift used."""
    if p.is_zero():
        return None, 0
    for k0 in range(max_shift + 1):
        q = _shift(p, k0)
        cs = [c for c in q.coeffs if c]
        s = 1 if q[0] > 0 else -1 if q[0] < 0 else 0
        if s and all((c > 0) == (s > 0) for c in cs):
            below = [p(k) for k in range(k0)]
            if all((v > 0) == (s > 0) and v != 0 for v in below):
                return ("positive" if s > 0 else "negative"), k0
            return None, k0
    return None, max_shift


@dataclass
class NPolyCertificate:
    expression: NPolyForm
    verdict: str | None
    corners: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict is not None

    def to_dict(self) -> dict:
        return {"expression": str(self.expression), "verdict": self.verdict or "no certificate",
                "corners": self.corners}


def npoly_sign_certificate(expr: NPolyForm) -> NPolyCertificate:
    """For each n the value is affine in (l, m) over a polygon with corners
    (0,n), (n,0), (0,h), (h,0) where h = (n-c)/2; writing n = 2k + c makes
    every corner value an integer polynomial in k >= 0."""
    corners = []
    verdicts = set()
    for c in (0, 1):
        n_of_k = IntPoly((c, 2))
        h_of_k = IntPoly((0, 1))

        def comp(p: IntPoly) -> IntPoly:
            out = IntPoly()
            for coef in reversed(p.coeffs):
                out = out * n_of_k + IntPoly.const(coef)
            return out

        V0, VL, VM = comp(expr.v0), comp(expr.vl), comp(expr.vm)
        for name, (lk, mk) in {"(0,n)": (IntPoly(), n_of_k), "(n,0)": (n_of_k, IntPoly()),
                               "(0,h)": (IntPoly(), h_of_k), "(h,0)": (h_of_k, IntPoly())}.items():
            val = V0 + lk * VL + mk * VM
            v, k0 = _univariate_sign_for_naturals(val)
            corners.append({"parity": "n-odd" if c else "n-even", "corner": name,
                            "value_in_k": val.to_text(), "verdict": v or "no certificate", "shift": k0})
            verdicts.add(v)
    verdict = verdicts.pop() if len(verdicts) == 1 else None
    return NPolyCertificate(expr, verdict, corners)


# ---------------------------------------------------------------------------
# the two sign tables


def _scaled_value(coeffs: list[AffineForm], x: Fraction) -> AffineForm:
    """q^deg * sum c_k x^k for x = p/q; same sign as the true value."""
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    deg = len(coeffs) - 1
    acc = AffineForm()
    for k, c in enumerate(coeffs):
        acc = acc + c * (p**k * q ** (deg - k))
    return acc


def _npoly_value(coeffs: list[AffineForm], at: IntPoly) -> NPolyForm:
    """sum c_k(l,m,n) * at(n)^k as an NPolyForm."""
    v0, vl, vm = IntPoly(), IntPoly(), IntPoly()
    pw = IntPoly.const(1)
    nvar = IntPoly((0, 1))
    for c in coeffs:
        v0 = v0 + pw * (IntPoly.const(c.c0) + nvar * c.cN)
        vl = vl + pw * c.cL
        vm = vm + pw * c.cM
        pw = pw * at
    return NPolyForm(v0, vl, vm)


def kempner_symbolic() -> ParamPoly:
    from .rootloc import kempner_transform

    return kempner_transform(_symbolic_q())


def quarter(form: AffineForm) -> AffineForm:
    if any(v % 4 for v in form.vec):
        raise CertifyError(f"{form} is not divisible by 4")
    return AffineForm(*(v // 4 for v in form.vec))


def parse_point(text: str):
    """'1/10' -> Fraction; '-(4n+6)' -> IntPoly in n."""
    text = text.replace(" ", "")
    if "n" in text:
        inner = text[2:-1] if text.startswith("-(") else text
        sign = -1 if text.startswith("-(") else 1
        a, b = inner.split("n")
        a = int(a) if a not in ("", "+") else 1
        b = int(b) if b else 0
        return IntPoly((sign * b, sign * a))
    return Fraction(text)


@dataclass
class TableRow:
    point: str
    expected: str
    value: str
    certificate: SignCertificate | NPolyCertificate

    @property
    def certified(self) -> str | None:
        return self.certificate.verdict

    @property
    def ok(self) -> bool:
        want = {"+": "positive", "-": "negative"}[self.expected]
        return self.certified == want

    def to_dict(self) -> dict:
        return {"point": self.point, "expected": self.expected, "value": self.value,
                "certified": self.certified or "no certificate", "ok": self.ok}


@dataclass
class RootLocationReport:
    k_rows: list[TableRow]
    f_rows: list[TableRow]
    k_roots: tuple[int, int]  # (negative, positive) roots of K forced by sign changes
    f_real_roots: int
    f_integer_root_possible: bool

    @property
    def ok(self) -> bool:
        return (all(r.ok for r in self.k_rows) and all(r.ok for r in self.f_rows)
                and self.k_roots == (2, 7) and self.f_real_roots == 9
                and not self.f_integer_root_possible)

    @property
    def conclusion(self) -> str:
        return (f"K has {self.k_roots[0]} negative and {self.k_roots[1]} positive roots; "
                f"f has {self.f_real_roots} real roots, "
                + ("an integral root is not excluded" if self.f_integer_root_possible else "none integral"))

    def to_dict(self) -> dict:
        return {"K_table": [r.to_dict() for r in self.k_rows],
                "f_table": [r.to_dict() for r in self.f_rows],
                "conclusion": self.conclusion, "ok": self.ok}


def _sign_changes(signs: list[str]) -> int:
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def verify_root_location_tables(golden: dict | None = None) -> RootLocationReport:
    from .golden import load_golden

    g = golden or load_golden()
    K = kempner_symbolic()
    kq = [quarter(c) for c in K.coeffs]
    k_rows = []
    for pt, sg in zip(g["K_sign_table"]["points"], g["K_sign_table"]["signs"]):
        val = _scaled_value(kq, Fraction(pt))
        k_rows.append(TableRow(pt, sg, str(val), sign_certificate(val, "both")))
    pts = [Fraction(p) for p in g["K_sign_table"]["points"]]
    signs = g["K_sign_table"]["signs"]
    neg = _sign_changes([s for p, s in zip(pts, signs) if p <= 0])
    pos = _sign_changes([s for p, s in zip(pts, signs) if p >= 0])

    f = residual_system(1).residual[0].univariate()
    f_rows = []
    for pt, sg in zip(g["f_sign_table"]["points"], g["f_sign_table"]["signs"]):
        x = parse_point(pt)
        if isinstance(x, IntPoly):
            val = _npoly_value(f, x)
            f_rows.append(TableRow(pt, sg, str(val), npoly_sign_certificate(val)))
        else:
            val = _scaled_value(f, x)
            f_rows.append(TableRow(pt, sg, str(val), sign_certificate(val, "both")))
    fsigns = g["f_sign_table"]["signs"]
    real_roots = _sign_changes(fsigns)
    # every root lies strictly inside a gap with a sign change; the listed
    # points themselves carry strict signs, so a root is integral only if some
    # such gap contains an integer
    integer_possible = False
    fixed = [parse_point(p) for p in g["f_sign_table"]["points"]]
    for (x, sx), (y, sy) in zip(zip(fixed, fsigns), zip(fixed[1:], fsigns[1:])):
        if sx == sy:
            continue
        if isinstance(x, IntPoly) or isinstance(y, IntPoly):
            # -(4n+6), -(4n+5) are consecutive integers for every n
            gap = y - x if isinstance(x, IntPoly) and isinstance(y, IntPoly) else None
            if gap is None or gap != IntPoly.const(1):
                integer_possible = True
            continue
        if math.floor(x) + 1 < y:
            integer_possible = True
    return RootLocationReport(k_rows, f_rows, (neg, pos), real_roots, integer_possible)


# ---------------------------------------------------------------------------
# residue tables modulo 3


SPECIALIZATIONS = {"0nn": (AffineForm(0), AffineForm(0, 0, 0, 1)),
                   "n0n": (AffineForm(0, 0, 0, 1), AffineForm(0))}


def _specialize_n(form: AffineForm, spec: str) -> tuple[int, int]:
    """Affine form in n after l, m are replaced per the specialization."""
    lf, mf = SPECIALIZATIONS[spec]
    res = AffineForm(form.c0, 0, 0, form.cN) + lf * form.cL + mf * form.cM
    return res.c0, res.cN


def _sym_mod(x: int, p: int) -> int:
    r = x % p
    return r - p if r > p // 2 else r


@dataclass
class ResidueCell:
    ab: tuple[int, int]
    f: tuple[int, int]
    g: tuple[int, int]
    f_mod: tuple[int, int]
    g_mod: tuple[int, int]
    allowed: list[int]

    @property
    def verdict(self) -> str:
        if not self.allowed:
            return "impossible"
        if len(self.allowed) == 1:
            return f"n%3=={self.allowed[0]}"
        return "n%3 in {" + ",".join(map(str, self.allowed)) + "}"

    def to_dict(self) -> dict:
        return {"ab": list(self.ab), "f": _lin_str(self.f), "g": _lin_str(self.g),
                "f_mod3": _lin_str(self.f_mod), "g_mod3": _lin_str(self.g_mod), "verdict": self.verdict}


def _lin_str(v: tuple[int, int]) -> str:
    c0, c1 = v
    if c1 == 0:
        return str(c0)
    nterm = ("" if abs(c1) == 1 else str(abs(c1))) + "n"
    if c0 == 0:
        return ("-" if c1 < 0 else "") + nterm
    return f"{c0}{'-' if c1 < 0 else '+'}{nterm}"


def residue_tables(spec: str, modulus: int = 3) -> list[ResidueCell]:
    sysd = residual_system(2)
    fpoly, gpoly = sysd.residual
    cells = []
    for ab in AB_CLASSES:
        f = _specialize_n(fpoly.at(ab), spec)
        g = _specialize_n(gpoly.at(ab), spec)
        fm = (_sym_mod(f[0], modulus), _sym_mod(f[1], modulus))
        gm = (_sym_mod(g[0], modulus), _sym_mod(g[1], modulus))
        allowed = [r for r in range(modulus)
                   if (f[0] + f[1] * r) % modulus == 0 and (g[0] + g[1] * r) % modulus == 0]
        cells.append(ResidueCell(ab, f, g, fm, gm, allowed))
    return cells


@dataclass
class FactorVerdict:
    spec: str
    d: int
    survivors: list[tuple[int, ...]]

    @property
    def verdict(self) -> str:
        return "no surviving class" if not self.survivors else "inconclusive"

    def to_dict(self) -> dict:
        return {"specialization": self.spec, "d": self.d, "verdict": self.verdict,
                "survivors": [list(s) for s in self.survivors]}


def no_small_palindromic_factor(spec: str, d: int, n_residue: int = 1, modulus: int = 3) -> FactorVerdict:
    """Exhaust the residue classes of the unknowns modulo 3 for n = n_residue (mod 3)."""
    res = residual_system(d).residual
    lf, mf = SPECIALIZATIONS[spec]
    n = n_residue
    l, m = lf(0, 0, n), mf(0, 0, n)
    survivors = []
    for x in product(range(modulus), repeat=d):
        if all(r.at(x)(l, m, n) % modulus == 0 for r in res):
            survivors.append(x)
    return FactorVerdict(spec, d, survivors)
