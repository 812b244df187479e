"""Terms, the lexicographic order ``x_1 < ... < x_n`` and order-ideal helpers.

A term ``x_1^g1 ... x_n^gn`` is stored as the exponent tuple ``(g1, ..., gn)``
in natural variable order.  The reversed layout ``[x_n, ..., x_1]`` used by
the e-list table only appears at the boundary (see :mod:`iterlex.barcode`).
"""
from __future__ import annotations

import itertools
import json
import re
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, NotOrderIdeal, ParseError

Term = tuple

_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def one(n: int) -> Term:
    return (0,) * n


def variable(k: int, n: int) -> Term:
    """The term ``x_k`` (1-based) in ``n`` variables."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"variable x{k} outside 1..{n}")
    return tuple(1 if i == k - 1 else 0 for i in range(n))


def lex_key(t: Sequence[int]) -> tuple:
    """Sort key realizing lex with ``x_n`` the most significant variable."""
    return tuple(reversed(t))


def lex_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` is lex-smaller, equal or larger than ``b``."""
    if len(a) != len(b):
        raise DimensionMismatch(f"terms of length {len(a)} and {len(b)}")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def lex_sorted(terms: Iterable[Term]) -> list[Term]:
    return sorted(terms, key=lex_key)


def multiply(a: Term, b: Term) -> Term:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Term, b: Term) -> bool:
    return all(x <= y for x, y in zip(a, b))


def degree(t: Term) -> int:
    return sum(t)


def project_low(t: Term, m: int) -> Term:
    """Keep ``x_1..x_m`` (the result lives in the ``m``-variable ring)."""
    if not 1 <= m <= len(t):
        raise IndexOutOfRange(f"projection index {m} outside 1..{len(t)}")
    return tuple(t[:m])


def project_high(t: Term, m: int) -> Term:
    """Keep ``x_m..x_n``, re-indexed from 1."""
    if not 1 <= m <= len(t):
        raise IndexOutOfRange(f"projection index {m} outside 1..{len(t)}")
    return tuple(t[m - 1:])


def min_variable(t: Term) -> int:
    """1-based index of the smallest variable dividing ``t`` (0 for ``t = 1``)."""
    for i, g in enumerate(t):
        if g:
            return i + 1
    return 0


def predecessors(t: Term) -> Iterator[Term]:
    """The terms ``t / x_k`` for every variable ``x_k`` dividing ``t``."""
    for k, g in enumerate(t):
        if g:
            yield t[:k] + (g - 1,) + t[k + 1:]


def is_order_ideal(terms: Iterable[Term]) -> bool:
    s = set(map(tuple, terms))
    return all(p in s for t in s for p in predecessors(t))


def terms_of_degree_at_most(n: int, d: int) -> Iterator[Term]:
    for t in itertools.product(range(d + 1), repeat=n):
        if sum(t) <= d:
            yield t


def minimal_generators(order_ideal: Iterable[Term], n: int,
                       degree_bound: int | None = None) -> list[Term]:
    """Minimal generators of the complement of a finite order ideal (brute force).

    Returned lex-sorted.  Only meant as a test oracle.
    """
    N = set(map(tuple, order_ideal))
    if any(len(t) != n for t in N):
        raise DimensionMismatch("term length differs from n")
    if not is_order_ideal(N):
        raise NotOrderIdeal("input is not closed under division")
    if degree_bound is None:
        degree_bound = max((sum(t) for t in N), default=-1) + 1
    out = [t for t in terms_of_degree_at_most(n, degree_bound)
           if t not in N and all(p in N for p in predecessors(t))]
    return lex_sorted(out)


def star_set_bruteforce(order_ideal: Iterable[Term], n: int) -> list[Term]:
    """``{t not in N : t / min(t) in N}`` by enumerating all terms up to degree max+1."""
    N = set(map(tuple, order_ideal))
    bound = max((sum(t) for t in N), default=-1) + 1
    out = []
    for t in terms_of_degree_at_most(n, bound):
        if t in N or not any(t):
            continue
        k = min_variable(t) - 1
        if t[:k] + (t[k] - 1,) + t[k + 1:] in N:
            out.append(t)
    return lex_sorted(out)


def render_term(t: Term) -> str:
    parts = []
    for i, g in enumerate(t):
        if g == 1:
            parts.append(f"x{i + 1}")
        elif g > 1:
            parts.append(f"x{i + 1}^{g}")
    return "*".join(parts) if parts else "1"


def parse_term(text: str, n: int) -> Term:
    """Parse ``"x1^2*x3"``, ``"1"`` or a JSON exponent array like ``"[2,0,1]"``."""
    text = text.strip()
    if text.startswith("["):
        try:
            exps = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad exponent vector {text!r}") from exc
        if len(exps) != n or any(not isinstance(e, int) or e < 0 for e in exps):
            raise ParseError(f"bad exponent vector {text!r} for n={n}")
        return tuple(exps)
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR_RE.fullmatch(factor.strip())
        if not m:
            raise ParseError(f"bad term factor {factor!r}")
        k = int(m.group(1))
        if not 1 <= k <= n:
            raise ParseError(f"variable x{k} outside 1..{n}")
        exps[k - 1] += int(m.group(2) or 1)
    return tuple(exps)
