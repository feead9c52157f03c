"""Exact integer polynomials, reduced rational functions, and polynomials
whose coefficients are affine in the gluing counts (l, m, n).

All values are immutable; every operation returns a new object.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Polynomial in t with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``; the zero polynomial has no
    coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # construction helpers
    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    # basic queries
    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.deg, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Number) -> int:
        """Exact sign of the value at a rational point."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        d = self.deg
        if d < 0:
            return 0
        # q**d * f(p/q) is an integer with the same sign (q > 0)
        acc = 0
        qpow = 1
        for k in range(d, -1, -1):
            acc = acc * p + self.coeffs[k] * qpow
            qpow *= q
        return (acc > 0) - (acc < 0)

    def derivative(self) -> IntPoly:
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = reduce(gcd, self.coeffs, 0)
        return g

    def primitive(self) -> IntPoly:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def reverse(self, n: int | None = None) -> IntPoly:
        return reciprocal_transform(self, self.deg if n is None else n)

    def scale_var(self, s: int) -> IntPoly:
        """f(s*t)."""
        return IntPoly(c * s**k for k, c in enumerate(self.coeffs))

    def divmod_q(self, other: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
        """Division over the rationals; returns coefficient lists."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        d = other.deg
        lc = other.lead
        if len(r) - 1 < d:
            return [], r
        q = [Fraction(0)] * (len(r) - d)
        for k in range(len(r) - 1 - d, -1, -1):
            coef = r[k + d] / lc
            q[k] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= coef * b
        while r and r[-1] == 0:
            r.pop()
        return q, r

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient in Z[t]; raises ArithmeticError when the division is not exact."""
        q, r = self.divmod_q(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        if any(c.denominator != 1 for c in q):
            raise ArithmeticError(f"{other} divides {self} only over Q")
        return IntPoly(int(c) for c in q)

    def divides(self, other: IntPoly) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def pseudo_rem(self, other: IntPoly) -> IntPoly:
        """Remainder of |lc|**(delta+1) * self by other; sign of self is preserved."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero")
        r = list(self.coeffs)
        d = other.deg
        lc = other.lead
        alc = abs(lc)
        sgn = 1 if lc > 0 else -1
        delta = len(r) - 1 - d
        if delta < 0:
            return self
        for _ in range(delta + 1):
            if len(r) - 1 < d:
                r = [c * alc for c in r]
                continue
            top = r[-1]
            k = len(r) - 1 - d
            r = [c * alc for c in r]
            # |lc|*r - sgn*top*t^k*other cancels the top term
            for j, b in enumerate(other.coeffs):
                r[k + j] -= sgn * top * b
            while r and r[-1] == 0:
                r.pop()
        return IntPoly(r)

    # serialization
    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, text: str) -> IntPoly:
        toks = text.split()
        if not toks:
            raise ValueError("empty polynomial text")
        return cls(int(tok) for tok in toks)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> IntPoly:
        data = json.loads(text)
        return cls(int(c) for c in data)


T = IntPoly((0, 1))
ONE = IntPoly.const(1)
ZERO = IntPoly()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd over Z[t], normalized to positive leading coefficient."""
    if a.is_zero():
        return -b if b.lead < 0 else b
    if b.is_zero():
        return -a if a.lead < 0 else a
    c = gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    if a.deg < b.deg:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    return a.primitive() * c


def poly_lcm(a: IntPoly, b: IntPoly) -> IntPoly:
    g = poly_gcd(a, b).primitive()
    return (a * b).exact_div(g)


def squarefree_part(f: IntPoly) -> IntPoly:
    if f.deg <= 0:
        return f
    g = poly_gcd(f, f.derivative()).primitive()
    return f.exact_div(g)


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm over Z: returns [(a_i, i)] with f = c * prod a_i**i."""
    if f.deg <= 0:
        return []
    f = f.primitive()
    out = []
    a0 = poly_gcd(f, f.derivative()).primitive()
    b = f.exact_div(a0)
    c = f.derivative()
    c = _div_q_to_int(c, a0)
    d = c - b.derivative()
    i = 1
    while b.deg > 0:
        a = poly_gcd(b, d).primitive()
        if a.deg > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = _div_q_to_int(d, a)
        d = c - b.derivative()
        i += 1
    return out


def _div_q_to_int(num: IntPoly, den: IntPoly) -> IntPoly:
    q, r = num.divmod_q(den)
    if r:
        raise ArithmeticError("inexact division in squarefree decomposition")
    # quotient may carry the leading-coefficient denominator of den
    lcm_den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in q), 1)
    if lcm_den != 1:
        raise ArithmeticError("non-integral quotient in squarefree decomposition")
    return IntPoly(int(c) for c in q)


def bracket(ms: Sequence[int]) -> IntPoly:
    """Product of [m] = 1 + t + ... + t^(m-1) over ms."""
    out = ONE
    for m in ms:
        if m < 1:
            raise ValueError(f"bracket entries must be >= 1, got {m}")
        out = out * IntPoly((1,) * m)
    return out


@lru_cache(maxsize=None)
def cyclotomic(i: int) -> IntPoly:
    if i < 1:
        raise ValueError("cyclotomic index must be positive")
    f = IntPoly.monomial(i) - 1
    for d in range(1, i):
        if i % d == 0:
            f = f.exact_div(cyclotomic(d))
    return f


def reciprocal_transform(f: IntPoly, n: int) -> IntPoly:
    """t**n * f(1/t)."""
    if n < f.deg:
        raise ValueError(f"degree bound {n} below degree {f.deg}")
    if f.is_zero():
        return f
    padded = list(f.coeffs) + [0] * (n + 1 - len(f.coeffs))
    return IntPoly(reversed(padded))


def is_palindromic(f: IntPoly) -> bool:
    return reciprocal_transform(f, f.deg) == f


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Reduced quotient num/den of integer polynomials.

    Normal form: gcd(num, den) = 1 including integer content, and the leading
    coefficient of ``den`` is positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly | int, den: IntPoly | int = 1):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if isinstance(den, int):
            den = IntPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            num = num.exact_div(g)
            den = den.exact_div(g)
            c = gcd(num.content(), den.content())
            if den.lead < 0:
                c = -c
            if c != 1:
                num = IntPoly(x // c for x in num.coeffs)
                den = IntPoly(x // c for x in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def _coerce(self, other):
        if isinstance(other, (int, IntPoly)):
            return RatFunc(other)
        if isinstance(other, RatFunc):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfunc_combine([(1, self), (1, o)])

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfunc_combine([(1, self), (-1, o)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __call__(self, x):
        return Fraction(self.num(Fraction(x))) / self.den(Fraction(x))

    def as_growth(self) -> tuple[IntPoly, IntPoly]:
        """(num, den) scaled so that den(0) = 1; growth functions have den(0) = +-1."""
        d0 = self.den[0]
        if d0 not in (1, -1):
            raise ValueError(f"den(0) = {d0} is not a unit")
        return self.num * d0, self.den * d0


# ---------------------------------------------------------------------------
# affine forms and parameter polynomials


class AffineForm:
    """c0 + cL*l + cM*m + cN*n with integer coefficients."""

    __slots__ = ("c0", "cL", "cM", "cN")

    def __init__(self, c0: int = 0, cL: int = 0, cM: int = 0, cN: int = 0):
        for v in (c0, cL, cM, cN):
            if not isinstance(v, int):
                raise TypeError("AffineForm coefficients must be int")
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "cL", cL)
        object.__setattr__(self, "cM", cM)
        object.__setattr__(self, "cN", cN)

    def __setattr__(self, name, value):
        raise AttributeError("AffineForm is immutable")

    @property
    def vec(self) -> tuple[int, int, int, int]:
        return (self.c0, self.cL, self.cM, self.cN)

    def is_constant(self) -> bool:
        return self.cL == 0 and self.cM == 0 and self.cN == 0

    def is_zero(self) -> bool:
        return self.vec == (0, 0, 0, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = AffineForm(other)
        if not isinstance(other, AffineForm):
            return NotImplemented
        return self.vec == other.vec

    def __hash__(self):
        return hash(("AffineForm", self.vec))

    def __repr__(self):
        return f"AffineForm{self.vec}"

    def __str__(self):
        names = ("", "l", "m", "n")
        parts = []
        for c, name in zip(self.vec, names):
            if c == 0:
                continue
            body = str(abs(c)) if not name else (name if abs(c) == 1 else f"{abs(c)}{name}")
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __add__(self, other):
        if isinstance(other, int):
            other = AffineForm(other)
        if not isinstance(other, AffineForm):
            return NotImplemented
        return AffineForm(*(x + y for x, y in zip(self.vec, other.vec)))

    __radd__ = __add__

    def __neg__(self):
        return AffineForm(*(-x for x in self.vec))

    def __sub__(self, other):
        if isinstance(other, int):
            other = AffineForm(other)
        if not isinstance(other, AffineForm):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AffineForm):
            if other.is_constant():
                other = other.c0
            elif self.is_constant():
                return other * self.c0
            else:
                raise ArithmeticError("product of two non-constant affine forms is not affine")
        if not isinstance(other, int):
            return NotImplemented
        return AffineForm(*(x * other for x in self.vec))

    __rmul__ = __mul__

    def __call__(self, l, m, n):
        return self.c0 + self.cL * l + self.cM * m + self.cN * n


L_FORM = AffineForm(0, 1, 0, 0)
M_FORM = AffineForm(0, 0, 1, 0)
N_FORM = AffineForm(0, 0, 0, 1)


def _as_form(x) -> AffineForm:
    if isinstance(x, AffineForm):
        return x
    if isinstance(x, int):
        return AffineForm(x)
    raise TypeError(f"cannot use {type(x).__name__} as affine coefficient")


class ParamPoly:
    """Polynomial in t whose coefficients are AffineForm values."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[AffineForm | int] = ()):
        cs = [_as_form(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    @classmethod
    def from_intpoly(cls, p: IntPoly, scale: AffineForm | int = 1) -> ParamPoly:
        scale = _as_form(scale)
        return cls(scale * c for c in p.coeffs)

    @classmethod
    def from_slices(cls, s0: IntPoly, sL: IntPoly, sM: IntPoly, sN: IntPoly) -> ParamPoly:
        n = max(len(s0), len(sL), len(sM), len(sN))
        return cls(AffineForm(s0[k], sL[k], sM[k], sN[k]) for k in range(n))

    def slices(self) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
        return tuple(IntPoly(c.vec[i] for c in self.coeffs) for i in range(4))

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> AffineForm:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return AffineForm()

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            other = ParamPoly.from_intpoly(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("ParamPoly", self.coeffs))

    def __repr__(self):
        return f"ParamPoly({[c.vec for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.deg, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(terms)

    def __add__(self, other):
        if isinstance(other, IntPoly):
            other = ParamPoly.from_intpoly(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ParamPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, IntPoly):
            other = ParamPoly.from_intpoly(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, AffineForm)):
            other = _as_form(other)
            return ParamPoly(c * other for c in self.coeffs)
        if isinstance(other, IntPoly):
            other = ParamPoly.from_intpoly(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ParamPoly()
        out = [AffineForm()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return ParamPoly(out)

    __rmul__ = __mul__

    def at_t(self, x: int) -> AffineForm:
        acc = AffineForm()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def specialize(self, l: int, m: int, n: int) -> IntPoly:
        return IntPoly(c(l, m, n) for c in self.coeffs)

    def is_param_free(self) -> bool:
        return all(c.is_constant() for c in self.coeffs)

    def to_intpoly(self) -> IntPoly:
        if not self.is_param_free():
            raise ValueError("polynomial depends on parameters")
        return IntPoly(c.c0 for c in self.coeffs)

    def exact_div(self, g: IntPoly) -> ParamPoly:
        return ParamPoly.from_slices(*(s.exact_div(g) if s else s for s in self.slices()))

    def content(self) -> int:
        return reduce(gcd, (v for c in self.coeffs for v in c.vec), 0)


def specialize(p: ParamPoly, l: int, m: int, n: int) -> IntPoly:
    return p.specialize(l, m, n)


class ParamRatFunc:
    """num/den with ParamPoly parts; the parameter-independent common factor
    and the joint integer content are cancelled on construction."""

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly):
        if isinstance(num, IntPoly):
            num = ParamPoly.from_intpoly(num)
        if isinstance(den, IntPoly):
            den = ParamPoly.from_intpoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = ZERO
        for s in num.slices() + den.slices():
            if s:
                g = poly_gcd(g, s) if g else s.primitive()
        g = g.primitive()
        if g.deg > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        c = gcd(num.content(), den.content())
        top = next(v for v in den.coeffs[-1].vec if v != 0)
        if top < 0:
            c = -c
        if c not in (0, 1):
            num = ParamPoly(AffineForm(*(v // c for v in x.vec)) for x in num.coeffs)
            den = ParamPoly(AffineForm(*(v // c for v in x.vec)) for x in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ParamRatFunc is immutable")

    def __repr__(self):
        return f"ParamRatFunc({self.num!r}, {self.den!r})"

    def specialize(self, l: int, m: int, n: int) -> RatFunc:
        return RatFunc(self.num.specialize(l, m, n), self.den.specialize(l, m, n))

    def inverse(self) -> ParamRatFunc:
        return ParamRatFunc(self.den, self.num)


def ratfunc_combine(terms: Sequence[tuple[AffineForm | int, RatFunc]]):
    """Exact sum of scalar * rational function over a common denominator.

    Returns a RatFunc when every scalar is an integer and a ParamRatFunc as
    soon as one scalar is an AffineForm.
    """
    terms = list(terms)
    if not terms:
        return RatFunc(0)
    den = ONE
    for _, r in terms:
        if r.den.is_zero():
            raise ZeroDivisionError("zero denominator in combination")
        den = poly_lcm(den, r.den)
    param = any(isinstance(s, AffineForm) and not s.is_constant() for s, _ in terms)
    if not param:
        num = ZERO
        for s, r in terms:
            s = s.c0 if isinstance(s, AffineForm) else s
            num = num + r.num * den.exact_div(r.den) * s
        return RatFunc(num, den)
    num = ParamPoly()
    for s, r in terms:
        num = num + ParamPoly.from_intpoly(r.num * den.exact_div(r.den), s)
    return ParamRatFunc(num, ParamPoly.from_intpoly(den))
