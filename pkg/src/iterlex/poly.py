"""Sparse polynomials as ``{exponent tuple: raw field value}`` dictionaries.

Zero coefficients are never stored.  The field is passed explicitly since raw
values do not carry it.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .errors import DimensionMismatch
from .monomials import Term, lex_key, render_term
from .scalar import FieldSpec

Poly = dict


def constant(c, n: int, field: FieldSpec) -> Poly:
    c = field.coerce(c)
    return {(0,) * n: c} if c != 0 else {}


def monomial(t: Term, field: FieldSpec) -> Poly:
    return {tuple(t): field.one}


def add(f: Mapping, g: Mapping, field: FieldSpec) -> Poly:
    out = dict(f)
    for t, c in g.items():
        v = field.add(out.get(t, field.zero), c)
        if v == 0:
            out.pop(t, None)
        else:
            out[t] = v
    return out


def scale(f: Mapping, c, field: FieldSpec) -> Poly:
    if c == 0:
        return {}
    return {t: field.mul(a, c) for t, a in f.items()}


def sub(f: Mapping, g: Mapping, field: FieldSpec) -> Poly:
    return add(f, scale(g, field.neg(field.one), field), field)


def mul_linear(f: Mapping, var: int, root, coef, field: FieldSpec) -> Poly:
    """``f * coef * (x_var - root)`` with ``var`` 1-based."""
    out: dict = {}
    k = var - 1
    neg_root = field.neg(field.mul(coef, root))
    for t, a in f.items():
        up = t[:k] + (t[k] + 1,) + t[k + 1:]
        out[up] = field.add(out.get(up, field.zero), field.mul(a, coef))
        if neg_root != 0:
            out[t] = field.add(out.get(t, field.zero), field.mul(a, neg_root))
    return {t: c for t, c in out.items() if c != 0}


def evaluate(f: Mapping, point: Sequence, field: FieldSpec):
    total = field.zero
    for t, c in f.items():
        if len(t) != len(point):
            raise DimensionMismatch(f"term in {len(t)} variables, point in {len(point)}")
        v = c
        for a, g in zip(point, t):
            if g:
                v = field.mul(v, pow(a, g) if field.p is None else pow(a, g, field.p))
        total = field.add(total, v)
    return total


def terms_sorted(f: Mapping) -> list[Term]:
    """Support in decreasing lex order (leading term first)."""
    return sorted(f, key=lex_key, reverse=True)


def leading_term(f: Mapping) -> Term | None:
    return max(f, key=lex_key) if f else None


def render(f: Mapping, field: FieldSpec) -> str:
    if not f:
        return "0"
    parts = []
    for t in terms_sorted(f):
        c = f[t]
        mono = render_term(t)
        cs = field.render(c)
        if mono == "1":
            piece = cs
        elif cs == "1":
            piece = mono
        elif cs == "-1":
            piece = "-" + mono
        else:
            piece = f"{cs}*{mono}"
        parts.append(piece)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def to_json(f: Mapping, field: FieldSpec) -> list:
    """``[[exponents, "coefficient"], ...]`` in decreasing lex order."""
    return [[list(t), field.render(f[t])] for t in terms_sorted(f)]


def from_json(data, field: FieldSpec) -> Poly:
    out: dict = {}
    for exps, c in data:
        v = field.parse_raw(str(c))
        if v != 0:
            out[tuple(int(e) for e in exps)] = v
    return out
