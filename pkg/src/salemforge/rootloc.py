"""Certified root location for integer polynomials.

Everything here is exact: Sturm sequences over Z, bisection at dyadic
rationals, and interval arithmetic on Fraction endpoints.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exactpoly import (
    ONE,
    IntPoly,
    ParamPoly,
    is_palindromic,
    poly_gcd,
    squarefree_decomposition,
)

REPORT_WIDTH = Fraction(1, 10**12)
MAX_BITS = 1024


class RootLocError(ArithmeticError):
    pass


class MultiplicityError(RootLocError):
    pass


class PrecisionExhausted(RootLocError):
    pass


# ---------------------------------------------------------------------------
# transforms


@lru_cache(maxsize=64)
def _dickson(k: int) -> IntPoly:
    """D_k with t^k + t^-k = D_k(t + 1/t)."""
    if k == 0:
        return IntPoly.const(2)
    if k == 1:
        return IntPoly((0, 1))
    return IntPoly((0, 1)) * _dickson(k - 1) - _dickson(k - 2)


def lift_trace(h: IntPoly) -> IntPoly:
    """t^d * h(t + 1/t) for h of degree d."""
    d = h.deg
    sq = IntPoly((1, 0, 1))
    out = IntPoly()
    pw = ONE
    for j in range(d + 1):
        if h[j]:
            out = out + pw * IntPoly.monomial(d - j, h[j])
        pw = pw * sq
    return out


def trace_transform(f: IntPoly) -> IntPoly:
    """The h of degree d with f(t) = t^d h(t + 1/t), for palindromic f of degree 2d."""
    if f.deg < 0 or f.deg % 2 or not is_palindromic(f):
        raise RootLocError("trace transform needs a palindromic polynomial of even degree")
    if f[0] == 0:
        raise RootLocError("trace transform needs f(0) != 0")
    d = f.deg // 2
    h = IntPoly.const(f[d])
    for k in range(1, d + 1):
        h = h + _dickson(k) * f[d + k]
    if lift_trace(h) != f:
        raise RootLocError("trace transform failed to re-expand")
    return h


def _gmul(p: list[tuple[int, int]], q: list[tuple[int, int]]) -> list[tuple[int, int]]:
    out = [(0, 0)] * (len(p) + len(q) - 1)
    for i, (a, b) in enumerate(p):
        if not (a or b):
            continue
        for j, (c, d) in enumerate(q):
            re, im = out[i + j]
            out[i + j] = (re + a * c - b * d, im + a * d + b * c)
    return out


@lru_cache(maxsize=256)
def _gpow(sign: int, k: int) -> tuple[tuple[int, int], ...]:
    """(t + sign*i)^k over the Gaussian integers, ascending."""
    base = [(0, sign), (1, 0)]
    out = [(1, 0)]
    for _ in range(k):
        out = _gmul(out, base)
    return tuple(out)


def _kempner_raw(coeffs: list[int], n: int) -> IntPoly:
    acc = [(0, 0)] * (n + 1)
    for k, a in enumerate(coeffs):
        if not a:
            continue
        term = _gmul(list(_gpow(1, k)), list(_gpow(-1, n - k)))
        for j, (re, im) in enumerate(term):
            r0, i0 = acc[j]
            acc[j] = (r0 + a * re, i0 + a * im)
    if any(im for _, im in acc):
        raise RootLocError("Kempner transform left an imaginary residue")
    if any(re for j, (re, _) in enumerate(acc) if j % 2):
        raise RootLocError("Kempner transform is not even")
    return IntPoly(acc[j][0] for j in range(0, n + 1, 2))


def kempner_transform(f: IntPoly | ParamPoly):
    """g(u) with (t-i)^n f((t+i)/(t-i)) = g(t^2)."""
    if isinstance(f, ParamPoly):
        n = f.deg
        if n % 2:
            raise RootLocError("Kempner transform needs even degree")
        slices = [_kempner_raw(list(s.coeffs), n) for s in f.slices()]
        return ParamPoly.from_slices(*slices)
    n = f.deg
    if n < 0 or n % 2 or not is_palindromic(f):
        raise RootLocError("Kempner transform needs a palindromic polynomial of even degree")
    if f(1) == 0 or f(-1) == 0:
        raise RootLocError("Kempner transform needs f(1) != 0 and f(-1) != 0")
    return _kempner_raw(list(f.coeffs), n)


# ---------------------------------------------------------------------------
# Sturm sequences and isolation


def _pos_primitive(p: IntPoly) -> IntPoly:
    g = p.content()
    return IntPoly(c // g for c in p.coeffs) if g > 1 else p


@lru_cache(maxsize=4096)
def sturm_sequence(p: IntPoly) -> tuple[IntPoly, ...]:
    if p.deg < 1:
        return (p,)
    seq = [_pos_primitive(p), _pos_primitive(p.derivative())]
    while seq[-1].deg > 0:
        r = seq[-2].pseudo_rem(seq[-1])
        if r.is_zero():
            break
        seq.append(_pos_primitive(-r))
    return tuple(seq)


def _sign_inf(p: IntPoly, positive: bool) -> int:
    s = 1 if p.lead > 0 else -1
    return s if positive or p.deg % 2 == 0 else -s


def _variations(signs) -> int:
    v, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _var_at(seq, x) -> int:
    if x == math.inf:
        return _variations(_sign_inf(p, True) for p in seq)
    if x == -math.inf:
        return _variations(_sign_inf(p, False) for p in seq)
    return _variations(p.sign_at(x) for p in seq)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    if p.is_zero():
        raise RootLocError("zero polynomial")
    for x in (lo, hi):
        if x not in (math.inf, -math.inf) and p.sign_at(x) == 0:
            raise RootLocError(f"endpoint {x} is a root")
    seq = sturm_sequence(p)
    return _var_at(seq, lo) - _var_at(seq, hi)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    lead = abs(p.lead)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead)


def _dyadic_ceil(x: Fraction) -> Fraction:
    k = 0
    while 2**k < x:
        k += 1
    return Fraction(2**k)


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    poly: IntPoly = field(compare=False, repr=False)

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo < Fraction(x) < self.hi

    def __float__(self):
        return float(self.mid)

    def refine(self, width=REPORT_WIDTH) -> IsolatingInterval:
        """Shrink to width < ``width`` keeping exactly the same root."""
        width = Fraction(width)
        p, lo, hi = self.poly, self.lo, self.hi
        slo = p.sign_at(lo)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            s = p.sign_at(mid)
            if s == 0:
                eps = width / 4
                return IsolatingInterval(mid - eps, mid + eps, p)
            if s == slo:
                lo = mid
            else:
                hi = mid
        return IsolatingInterval(lo, hi, p)

    def reciprocal(self) -> IsolatingInterval:
        """Interval for 1/x; needs 0 outside the interval."""
        if self.lo < 0 < self.hi or self.lo == 0 or self.hi == 0:
            raise RootLocError("interval touches zero")
        return IsolatingInterval(1 / self.hi, 1 / self.lo, self.poly.reverse())

    def decimal_lo(self, digits: int = 12) -> str:
        return _fmt(math.floor(self.lo * 10**digits), digits)

    def decimal_hi(self, digits: int = 12) -> str:
        return _fmt(math.ceil(self.hi * 10**digits), digits)

    def to_dict(self, digits: int = 12) -> dict:
        return {"lo": self.decimal_lo(digits), "hi": self.decimal_hi(digits),
                "lo_exact": str(self.lo), "hi_exact": str(self.hi)}


def _fmt(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def _split_point(p: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    step = (hi - lo) / 64
    k = 1
    while p.sign_at(mid) == 0:
        mid = (lo + hi) / 2 + (k if k % 2 else -k) * step / 8
        k += 1
    return mid


def isolate_real_roots(p: IntPoly, width=None) -> list[IsolatingInterval]:
    """Disjoint isolating intervals, one per distinct real root, ascending."""
    if p.is_zero():
        raise RootLocError("zero polynomial")
    if p.deg < 1:
        return []
    q = _squarefree(p)
    B = _dyadic_ceil(root_bound(q))
    out = []
    stack = [(-B, B, sturm_count(q, -B, B))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append(IsolatingInterval(lo, hi, q))
            continue
        mid = _split_point(q, lo, hi)
        stack.append((lo, mid, sturm_count(q, lo, mid)))
        stack.append((mid, hi, sturm_count(q, mid, hi)))
    out.sort(key=lambda iv: iv.lo)
    if width is not None:
        out = [iv.refine(width) for iv in out]
    return out


def _squarefree(p: IntPoly) -> IntPoly:
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g) if g.deg > 0 else p


# ---------------------------------------------------------------------------
# root profiles


@dataclass(frozen=True)
class RootProfile:
    degree: int
    circle_pairs: int
    real_pairs: int
    unresolved: int

    def __post_init__(self):
        if 2 * self.circle_pairs + 2 * self.real_pairs + self.unresolved != self.degree:
            raise ValueError("root profile does not add up to the degree")

    def to_dict(self) -> dict:
        return {"degree": self.degree, "circle_pairs": self.circle_pairs,
                "real_pairs": self.real_pairs, "unresolved": self.unresolved}


def _check_profile_input(f: IntPoly) -> None:
    if f.deg < 2 or f.deg % 2 or not is_palindromic(f):
        raise RootLocError("root profile needs a palindromic polynomial of even degree")
    if f(1) == 0 or f(-1) == 0:
        raise RootLocError("root profile needs f(1) != 0 and f(-1) != 0")
    if poly_gcd(f, f.derivative()).deg > 0:
        raise MultiplicityError("polynomial has a repeated root")


def profile_kempner(f: IntPoly) -> RootProfile:
    g = kempner_transform(f)
    B = root_bound(g) + 1
    pos = sturm_count(g, 0, B)
    neg = sturm_count(g, -B, 0)
    return RootProfile(f.deg, pos, neg, f.deg - 2 * pos - 2 * neg)


def profile_trace(f: IntPoly) -> RootProfile:
    h = trace_transform(f)
    B = max(root_bound(h) + 1, Fraction(3))
    inside = sturm_count(h, -2, 2)
    outside = sturm_count(h, -B, -2) + sturm_count(h, 2, B)
    return RootProfile(f.deg, inside, outside, f.deg - 2 * inside - 2 * outside)


def root_profile(f: IntPoly) -> RootProfile:
    _check_profile_input(f)
    a = profile_kempner(f)
    b = profile_trace(f)
    if a != b:
        raise RootLocError(f"Kempner route {a} disagrees with trace route {b}")
    return a


# ---------------------------------------------------------------------------
# factorization of reciprocal polynomials


class FactorError(RootLocError):
    pass


def _imul(x, y):
    ps = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return (min(ps), max(ps))


def _interval_poly(roots: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    """Interval coefficients (ascending) of prod (x - r) over interval roots."""
    out = [(Fraction(1), Fraction(1))]
    for lo, hi in roots:
        neg = (-hi, -lo)
        new = [(Fraction(0), Fraction(0))] * (len(out) + 1)
        for k, c in enumerate(out):
            a = new[k + 1]
            new[k + 1] = (a[0] + c[0], a[1] + c[1])
            pr = _imul(c, neg)
            b = new[k]
            new[k] = (b[0] + pr[0], b[1] + pr[1])
        out = new
    return out


def _trapped_integers(iv: tuple[Fraction, Fraction]) -> int:
    lo, hi = iv
    return max(0, math.floor(hi) - math.ceil(lo) + 1)


def _search_factor(p: IntPoly, roots: list[IsolatingInterval], size: int, max_bits: int):
    """Monic integer factor of p whose roots are a ``size``-subset of ``roots``.

    Returns (factor, subset indices) or None when no subset of this size works.
    """
    bits = 32
    while True:
        w = Fraction(1, 2**bits)
        rs = [iv.refine(w) for iv in roots]
        ambiguous = False
        for sub in combinations(range(len(rs)), size):
            coeffs = _interval_poly([(rs[i].lo, rs[i].hi) for i in sub])
            counts = [_trapped_integers(c) for c in coeffs]
            if 0 in counts:
                continue
            if any(c > 1 for c in counts):
                ambiguous = True
                continue
            cand = IntPoly(math.ceil(lo) for lo, _ in coeffs)
            if cand.divides(p):
                return cand, sub
        if not ambiguous:
            return None
        bits *= 2
        if bits > max_bits:
            raise PrecisionExhausted(f"could not resolve factor candidates of size {size}")


def _factor_real_rooted(p: IntPoly, max_bits: int, max_size: int | None = None) -> list[IntPoly]:
    """Irreducible factors of a monic squarefree p whose roots are all real."""
    roots = isolate_real_roots(p)
    if len(roots) != p.deg:
        raise FactorError("polynomial has non-real roots")
    factors = []
    size = 1
    limit = max_size if max_size is not None else p.deg // 2
    while size <= min(limit, len(roots) // 2):
        hit = _search_factor(p, roots, size, max_bits)
        if hit is None:
            size += 1
            continue
        g, sub = hit
        factors.append(g)
        p = p.exact_div(g)
        roots = [iv.refine(Fraction(1, 2**32)) for k, iv in enumerate(roots) if k not in sub]
        roots = [IsolatingInterval(iv.lo, iv.hi, p) for iv in roots]
    if p.deg > 0:
        factors.append(p)
    return factors


def _split_lifted(F: IntPoly, h_factor: IntPoly, max_bits: int) -> list[IntPoly]:
    """Split t^k h(t+1/t) into g * g^* when it has no root on the circle."""
    if sturm_count(h_factor, -2, 2) > 0:
        return [F]
    # all roots of F are real and off the circle; a non-palindromic irreducible
    # factor g must have exactly half the degree
    roots = isolate_real_roots(F)
    if len(roots) != F.deg:
        raise FactorError("lifted factor has non-real roots")
    hit = _search_factor(F, roots, F.deg // 2, max_bits)
    if hit is None:
        return [F]
    g, _ = hit
    rest = F.exact_div(g)
    return [g, rest]


def _sort_key(p: IntPoly):
    return (p.deg, p.coeffs)


def factor_reciprocal(f: IntPoly, max_bits: int = MAX_BITS) -> list[IntPoly]:
    """Complete factorization over Z of a palindromic polynomial whose roots lie
    on the unit circle or the real line. Factors are returned with multiplicity."""
    if f.deg < 1:
        raise FactorError("nothing to factor")
    if not is_palindromic(f):
        raise FactorError("factor_reciprocal needs a palindromic polynomial")
    out: list[IntPoly] = []
    rest = f
    for lin in (IntPoly((1, 1)), IntPoly((-1, 1))):
        while rest.deg > 0 and rest(lin[0] * -1) == 0:
            rest = rest.exact_div(lin)
            out.append(lin)
    if rest.deg <= 0:
        if rest.coeffs not in ((1,), (-1,)):
            raise FactorError("non-unit content")
        return sorted(out, key=_sort_key)
    if abs(rest[0]) != 1 or abs(rest.lead) != 1:
        raise FactorError("needs a monic polynomial with unit constant term")
    for s, mult in squarefree_decomposition(rest):
        if not is_palindromic(s):
            raise FactorError("squarefree part is not palindromic")
        h = trace_transform(s)
        if h.lead < 0:
            h = -h
        for hf in _factor_real_rooted(h, max_bits):
            F = lift_trace(hf)
            for g in _split_lifted(F, hf, max_bits):
                out.extend([g] * mult)
    prod = ONE
    for g in out:
        prod = prod * g
    if prod != f and prod != -f:
        raise FactorError("factors do not reassemble the input")
    return sorted(out, key=_sort_key)


def is_irreducible(f: IntPoly) -> bool:
    return len(factor_reciprocal(f)) == 1


# ---------------------------------------------------------------------------
# Salem classification and growth rates


class SalemKind(enum.Enum):
    SALEM = "Salem"
    TWO_SALEM = "TwoSalem"
    NEITHER = "Neither"


@dataclass(frozen=True)
class SalemClass:
    kind: SalemKind
    witnesses: tuple[IsolatingInterval, ...] = ()
    profile: RootProfile | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind.value,
                "witnesses": [w.to_dict() for w in self.witnesses],
                "profile": self.profile.to_dict() if self.profile else None,
                "reason": self.reason}


def roots_above_one(f: IntPoly, width=REPORT_WIDTH) -> list[IsolatingInterval]:
    """Isolating intervals for the real roots greater than 1, descending."""
    out = []
    for iv in isolate_real_roots(f):
        if iv.hi <= 1:
            continue
        iv = iv.refine(width)
        while iv.lo < 1 < iv.hi:
            iv = iv.refine(iv.width / 2)
        if iv.lo >= 1:
            out.append(iv)
    return sorted(out, key=lambda iv: iv.lo, reverse=True)


def classify_salem(f: IntPoly) -> SalemClass:
    if f.deg < 2 or f.deg % 2 or not is_palindromic(f):
        return SalemClass(SalemKind.NEITHER, reason="not palindromic of even degree")
    if f(1) == 0 or f(-1) == 0:
        return SalemClass(SalemKind.NEITHER, reason="root at 1 or -1")
    try:
        prof = root_profile(f)
    except MultiplicityError:
        return SalemClass(SalemKind.NEITHER, reason="repeated root")
    if prof.unresolved:
        return SalemClass(SalemKind.NEITHER, profile=prof, reason="roots off the circle and the real line")
    if prof.circle_pairs < 1 or prof.real_pairs not in (1, 2):
        return SalemClass(SalemKind.NEITHER, profile=prof, reason="root profile")
    if not is_irreducible(f):
        return SalemClass(SalemKind.NEITHER, profile=prof, reason="reducible")
    wit = tuple(roots_above_one(f))
    kind = SalemKind.SALEM if prof.real_pairs == 1 else SalemKind.TWO_SALEM
    return SalemClass(kind, wit, prof, "ok")


def positive_roots(q: IntPoly) -> list[IsolatingInterval]:
    """Isolating intervals with lo >= 0 for the positive roots, ascending."""
    if q.sign_at(0) == 0:
        raise RootLocError("q vanishes at 0")
    out = []
    for iv in isolate_real_roots(q):
        while iv.lo < 0 < iv.hi:
            iv = iv.refine(iv.width / 2)
        if iv.lo >= 0:
            out.append(iv)
    return out


def reciprocal_root(q: IntPoly, index: int = 0, width=REPORT_WIDTH) -> IsolatingInterval:
    """Interval for 1/r where r is the index-th smallest positive root of q."""
    pos = positive_roots(q)
    if len(pos) <= index:
        raise RootLocError("not enough positive roots")
    iv = pos[index]
    while True:
        if iv.lo > 0:
            rec = iv.reciprocal()
            if rec.width < Fraction(width):
                return rec
        iv = iv.refine(iv.width / 2)


def growth_rate(q: IntPoly, width=REPORT_WIDTH) -> IsolatingInterval:
    """tau = 1 / (smallest positive root of q)."""
    return reciprocal_root(q, 0, width)


# ---------------------------------------------------------------------------
# Cohn's criterion


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int, rounds: int = 64, seed: int = 0) -> bool:
    """Miller-Rabin with ``rounds`` seeded random bases."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(seed)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CohnWitness:
    H: int
    n: int
    value: int
    prime: bool

    def to_dict(self) -> dict:
        return {"H": self.H, "n": self.n, "value": str(self.value),
                "digits": len(str(self.value)), "prime": self.prime}


def cohn_height(f: IntPoly) -> int:
    return max((abs(c) for c in f.coeffs[:-1]), default=0)


def cohn_check(f: IntPoly, bound: int = 10000, rounds: int = 64) -> CohnWitness | None:
    """First n >= H + 2 (up to ``bound``) with f(n) a probable prime."""
    if f.lead != 1:
        raise RootLocError("Cohn's criterion needs a monic polynomial")
    H = cohn_height(f)
    for n in range(H + 2, bound + 1):
        v = f(n)
        if v > 1 and is_probable_prime(v, rounds):
            return CohnWitness(H, n, v, True)
    return None
