"""Invariant suite: every property the components promise, checked on one input."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import poly
from .barcode import BarCode
from .monomials import is_order_ideal, lex_sorted, star_set_bruteforce
from .mulmat import gauss_inverse
from .oracles import bm_escalier_oracle, cerlienco_mureddu
from .pipeline import Session
from .scalar import RATIONALS, FieldSpec


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"check": self.name, "passed": self.passed}
        if self.detail:
            out["counterexample"] = self.detail
        return out


def _check(name: str, fn: Callable[[], str | None]) -> CheckResult:
    try:
        problem = fn()
    except Exception as exc:  # a crashing check is a failed check, with the reason kept
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, problem is None, problem or "")


def run_checks(points: Sequence[Sequence], field: FieldSpec = RATIONALS,
               session: Session | None = None) -> list[CheckResult]:
    """Run every invariant on ``points``; the session is built with ``check=True``
    unless one is supplied."""
    pts = [tuple(field.coerce(a) for a in P) for P in points]
    n = len(pts[0])
    N = len(pts)
    if session is None:
        session = Session(n, field, check=True).extend(pts)
    g = session.game
    esc = g.escalier()
    terms = g.terms
    res: list[CheckResult] = []

    def oracle_equivalence():
        cm = cerlienco_mureddu(pts)
        if terms != cm:
            i = next(k for k in range(N) if terms[k] != cm[k])
            return f"point {i + 1}: game gives {terms[i]}, recursive oracle gives {cm[i]}"
        bm = bm_escalier_oracle(pts, field)
        if esc != bm or lex_sorted(cm) != bm:
            return f"escalier {esc} vs rank oracle {bm}"
        return None

    def order_ideal():
        return None if is_order_ideal(esc) else f"escalier {esc} is not closed under division"

    def admissible():
        if not g.barcode.is_admissible():
            return "Bar Code fails the predecessor criterion"
        rebuilt = BarCode.from_terms(terms, labels=range(1, N + 1))
        if rebuilt != g.barcode:
            return f"Bar Code {g.barcode.bars} differs from the diagram of its terms {rebuilt.bars}"
        return None

    def star_set():
        got, want = g.barcode.star_set(), star_set_bruteforce(esc, n)
        return None if got == want else f"star set {got} vs brute force {want}"

    def kronecker():
        fam = session.separators
        bad = fam.kronecker_defects(pts)
        if bad:
            i, j = bad[0]
            return f"Q_{i}(P_{j}) = {field.render(fam[i].evaluate(pts[j - 1]))}"
        for q in fam.separators:
            if not q.is_squarefree():
                return f"Q_{q.owner} has a repeated factor"
        return None

    def identities():
        st = session.matrices
        for name, M in st.residuals().items():
            for i, r in enumerate(M):
                for j, x in enumerate(r):
                    if x != 0:
                        return f"{name} has entry ({i + 1},{j + 1}) = {field.render(x)}"
        if st.matrix("C") != gauss_inverse(st.matrix("B"), field):
            return "bordered inverse differs from the Gauss-Jordan inverse"
        return None

    def groebner_vanishing():
        star = g.barcode.star_set()
        border = session.groebner()
        if [t for t, _ in border] != star:
            return "border polynomials do not match the star set"
        for t, gp in border:
            if poly.leading_term(gp) != t:
                return f"g_{t} has leading term {poly.leading_term(gp)}"
            extra = set(gp) - {t} - set(esc)
            if extra:
                return f"g_{t} has support outside the escalier: {sorted(extra)}"
            for j, P in enumerate(pts, start=1):
                v = poly.evaluate(gp, P, field)
                if v != 0:
                    return f"g_{t} at P_{j} = {field.render(v)}"
        return None

    def write_once():
        w = g.table.writes
        return None if w == N * n else f"{w} writes to M, expected {N * n}"

    res.append(_check("oracle-equivalence", oracle_equivalence))
    res.append(_check("order-ideal", order_ideal))
    res.append(_check("barcode-admissible", admissible))
    res.append(_check("star-set", star_set))
    if session.separators is not None:
        res.append(_check("separators-kronecker", kronecker))
    if session.matrices is not None:
        res.append(_check("matrix-identities", identities))
        res.append(_check("groebner-vanishing", groebner_vanishing))
    res.append(_check("write-once", write_once))
    return res
