"""Loader for the stored reference expressions (data/golden.json).

The expressions are kept as human-readable strings and parsed with sympy into
the engine's own exact types; sympy is used only as a parser here.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from .exactpoly import AffineForm, IntPoly, ParamPoly, RatFunc

_TRANSFORMS = standard_transformations + (implicit_multiplication, convert_xor)
_NAMES = {s: sympy.Symbol(s) for s in ("t", "u", "l", "m", "n", "a", "b", "c", "d")}
PARAMS = (_NAMES["l"], _NAMES["m"], _NAMES["n"])


def default_path() -> Path:
    return Path(str(resources.files("salemforge") / "data" / "golden.json"))


@lru_cache(maxsize=8)
def _load(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_golden(path: str | Path | None = None) -> dict:
    return _load(str(path or default_path()))


def parse(text: str) -> sympy.Expr:
    return parse_expr(text, local_dict=dict(_NAMES), transformations=_TRANSFORMS)


def _int(x) -> int:
    x = sympy.Rational(x)
    if x.q != 1:
        raise ValueError(f"non-integer coefficient {x}")
    return int(x.p)


def affine_from_expr(expr) -> AffineForm:
    if isinstance(expr, str):
        expr = parse(expr)
    poly = sympy.Poly(sympy.expand(expr), *PARAMS)
    if poly.total_degree() > 1:
        raise ValueError(f"{expr} is not affine in l, m, n")
    l, m, n = PARAMS
    return AffineForm(
        _int(poly.coeff_monomial(1)),
        _int(poly.coeff_monomial(l)),
        _int(poly.coeff_monomial(m)),
        _int(poly.coeff_monomial(n)),
    )


def intpoly_from_expr(expr, var: str = "t") -> IntPoly:
    if isinstance(expr, str):
        expr = parse(expr)
    poly = sympy.Poly(sympy.expand(expr), _NAMES[var])
    return IntPoly(_int(c) for c in reversed(poly.all_coeffs()))


def ratfunc_from_expr(expr, var: str = "t") -> RatFunc:
    if isinstance(expr, str):
        expr = parse(expr)
    num, den = sympy.fraction(sympy.together(expr))
    return RatFunc(intpoly_from_expr(num, var), intpoly_from_expr(den, var))


def parampoly_from_expr(expr, var: str = "t") -> ParamPoly:
    if isinstance(expr, str):
        expr = parse(expr)
    poly = sympy.Poly(sympy.expand(expr), _NAMES[var])
    return ParamPoly(affine_from_expr(c) for c in reversed(poly.all_coeffs()))


def mpoly_terms(expr, unknowns: tuple[str, ...]) -> dict[tuple[int, ...], AffineForm]:
    """{exponent tuple: AffineForm} for a polynomial in the given unknowns."""
    if isinstance(expr, str):
        expr = parse(expr)
    gens = [_NAMES[v] for v in unknowns]
    poly = sympy.Poly(sympy.expand(expr), *gens)
    return {tuple(e): affine_from_expr(c) for e, c in poly.terms()}


def rational(text: str) -> Fraction:
    return Fraction(text)
