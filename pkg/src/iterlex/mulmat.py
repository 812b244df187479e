"""Multiplication matrices of the quotient algebra, maintained point by point.

With ``t_1..t_N`` the escalier terms in point order and ``P_1..P_N`` the
points:

* ``B[l][j] = t_l(P_j)`` (evaluation matrix), ``C = B^{-1}``;
* ``D_h[l][j] = a_{h,j} * t_l(P_j)`` where ``a_{h,j}`` is coordinate ``h`` of ``P_j``;
* ``A_h = D_h C`` is the matrix of multiplication by ``x_h``: row ``l`` holds
  the coordinates of ``x_h t_l`` in the basis ``t_1..t_N``.

Adding a point borders every matrix with one row and one column.  ``B`` and
``D_h`` are bordered from the recorded factorization ``t_N = x_s t_l`` without
evaluating any term; ``C`` is bordered by the Schur-complement update and each
``A_h`` by a rank-one correction, for ``O(n N^2)`` work per point.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from . import poly
from .errors import DimensionMismatch, InconsistentState, SingularPivot
from .kernels import backend_for
from .monomials import Term
from .scalar import RATIONALS, FieldSpec


def _eval_term(t: Term, P: Sequence, field: FieldSpec):
    v = field.one
    for a, g in zip(P, t):
        for _ in range(g):
            v = field.mul(v, a)
    return v


class MulState:
    """Incremental ``B``, ``C``, ``D_h`` and ``A_h`` for an ordered point set.

    ``check=True`` compares every new row and column of ``B`` and ``D_h`` with
    direct evaluation and raises :class:`InconsistentState` on a mismatch.
    ``keep_history=True`` stores ``C`` and every ``A_h`` after each step.
    """

    def __init__(self, n: int, field: FieldSpec = RATIONALS, backend: str | None = None,
                 check: bool = False, keep_history: bool = False):
        self.n = n
        self.field = field
        self.kernels = backend_for(field, backend)
        self.check = check
        self.points: list[tuple] = []
        self.terms: list[Term] = []
        self.sigma: list[tuple[int, int] | None] = []
        k = self.kernels
        self.B = k.new()
        self.C = k.new()
        self.D = [k.new() for _ in range(n)]
        self.A = [k.new() for _ in range(n)]
        self.history: list[dict] | None = [] if keep_history else None

    def __len__(self):
        return len(self.points)

    # update -----------------------------------------------------------------
    def add_point(self, point: Sequence, sigma: tuple[int, int] | None) -> None:
        """Border all matrices for a new point with ``t_N = x_s t_l`` (``sigma = (s, l)``,
        ``None`` for the first point)."""
        f = self.field
        n = self.n
        if len(point) != n:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {n}")
        P = tuple(f.coerce(a) for a in point)
        N = len(self.points) + 1
        if N == 1:
            if sigma is not None:
                raise InconsistentState("the first term must be 1")
            self._commit_first(P)
            return
        if sigma is None:
            raise InconsistentState(f"term {N} needs a factorization x_s * t_l")
        s, l = sigma
        if not (1 <= s <= n and 1 <= l < N):
            raise InconsistentState(f"bad factorization (s={s}, l={l}) for term {N}")
        k = self.kernels
        pts = self.points + [P]
        sig = self.sigma + [sigma]
        mul = f.mul

        # new column of B: t_h(P_N) = a_{s(h),N} t_{l(h)}(P_N), t_1 = 1
        bcol = [f.one] * N
        for h in range(1, N):
            sh, lh = sig[h]
            bcol[h] = mul(P[sh - 1], bcol[lh - 1])
        # new row of B: t_N(P_i) = a_{s,i} t_l(P_i)
        Bl = k.to_list(k.row(self.B, l - 1))
        brow = [mul(pts[i][s - 1], Bl[i]) for i in range(N - 1)] + [bcol[N - 1]]

        dcols, drows = [], []
        for h in range(n):
            dcol = [P[h]] * N
            for r in range(1, N):
                sr, lr = sig[r]
                dcol[r] = mul(P[sr - 1], dcol[lr - 1])
            Dl = k.to_list(k.row(self.D[h], l - 1))
            drow = [mul(pts[i][s - 1], Dl[i]) for i in range(N - 1)]
            drow.append(mul(P[s - 1], dcol[l - 1]))
            dcols.append(dcol)
            drows.append(drow)

        term = tuple(e + (1 if v == s - 1 else 0) for v, e in enumerate(self.terms[l - 1]))
        if self.check:
            self._check_border(pts, self.terms + [term], bcol, brow, dcols, drows)

        # C: last row of the bordered identity, then the pivot, before any mutation
        i_row = k.to_list(k.vec_mat(k.vector(brow[:N - 1]), self.C))
        pivot = f.sub(brow[N - 1], _dot(bcol[:N - 1], i_row, f))
        if pivot == 0:
            raise SingularPivot(f"zero pivot while adding point {N}")
        u = k.to_list(k.mat_vec(self.C, k.vector(bcol[:N - 1])))
        inv = f.inv(pivot)
        w = [f.neg(mul(x, inv)) for x in u] + [inv]
        i_vec = k.vector(i_row)
        k.rank1_sub(self.C, k.vector(w[:N - 1]), i_vec)
        wN = w[N - 1]
        k.border(self.C, w[:N - 1], [f.neg(mul(x, wN)) for x in i_row] + [wN])

        k.border(self.B, bcol[:N - 1], brow)
        w_vec = k.vector(w)
        for h in range(n):
            k.border(self.D[h], dcols[h][:N - 1], drows[h])
            # last column of A_h = D_h w; earlier columns lose i_row times it
            aN = k.to_list(k.mat_vec(self.D[h], w_vec))
            k.rank1_sub(self.A[h], k.vector(aN[:N - 1]), i_vec)
            rowN = k.to_list(k.vec_mat(k.vector(drows[h]), self.C))
            k.border(self.A[h], aN[:N - 1], rowN)

        self.points.append(P)
        self.terms.append(term)
        self.sigma.append(sigma)
        self._record()

    def _commit_first(self, P: tuple) -> None:
        k = self.kernels
        f = self.field
        k.border(self.B, [], [f.one])
        k.border(self.C, [], [f.one])
        for h in range(self.n):
            k.border(self.D[h], [], [P[h]])
            k.border(self.A[h], [], [P[h]])
        self.points.append(P)
        self.terms.append((0,) * self.n)
        self.sigma.append(None)
        self._record()

    def _check_border(self, pts, terms, bcol, brow, dcols, drows) -> None:
        f = self.field
        N = len(pts)
        tN = terms[-1]
        for h in range(N):
            if bcol[h] != _eval_term(terms[h], pts[-1], f):
                raise InconsistentState(f"B[{h + 1}][{N}] disagrees with direct evaluation")
            if brow[h] != _eval_term(tN, pts[h], f):
                raise InconsistentState(f"B[{N}][{h + 1}] disagrees with direct evaluation")
        for v in range(self.n):
            for h in range(N):
                if dcols[v][h] != f.mul(pts[-1][v], bcol[h]) or \
                        drows[v][h] != f.mul(pts[h][v], brow[h]):
                    raise InconsistentState(f"D_{v + 1} border disagrees with a_{v + 1} * B")

    def _record(self) -> None:
        if self.history is not None:
            self.history.append({"C": self.matrix("C"),
                                 "A": [self.matrix("A", h) for h in range(1, self.n + 1)]})

    # access -----------------------------------------------------------------
    def matrix(self, name: str, h: int | None = None) -> list[list]:
        """Raw-value copy of ``B``, ``C``, ``D`` or ``A`` (``h`` 1-based for the last two)."""
        if name in ("B", "C"):
            M = getattr(self, name)
        elif name in ("D", "A"):
            if h is None or not 1 <= h <= self.n:
                raise DimensionMismatch(f"{name} needs a variable index in 1..{self.n}")
            M = getattr(self, name)[h - 1]
        else:
            raise KeyError(name)
        rows = M.to_lists()
        return [[self.field.coerce(x) for x in r] for r in rows]

    def to_json(self) -> dict:
        f = self.field
        enc = lambda M: [[f.render(x) for x in r] for r in M]  # noqa: E731
        return {
            "B": enc(self.matrix("B")),
            "C": enc(self.matrix("C")),
            "D": [enc(self.matrix("D", h)) for h in range(1, self.n + 1)],
            "A": [enc(self.matrix("A", h)) for h in range(1, self.n + 1)],
        }

    # derived quantities -----------------------------------------------------
    def normal_form(self, f: Mapping | Sequence) -> list:
        """Coordinates of ``f`` in the basis ``t_1..t_N``.

        ``f`` is a sparse polynomial or directly its vector of values at the points.
        """
        k = self.kernels
        F = self.field
        if isinstance(f, Mapping):
            for t in f:
                if len(t) != self.n:
                    raise DimensionMismatch(f"term in {len(t)} variables, expected {self.n}")
            vals = [poly.evaluate(f, P, F) for P in self.points]
        else:
            vals = [F.coerce(v) for v in f]
            if len(vals) != len(self.points):
                raise DimensionMismatch(f"{len(vals)} values for {len(self.points)} points")
        return [F.coerce(x) for x in k.to_list(k.vec_mat(k.vector(vals), self.C))]

    def residuals(self) -> dict[str, list[list]]:
        """The exact identities, each as a matrix that must be zero."""
        F = self.field
        N = len(self.points)
        B, C = self.matrix("B"), self.matrix("C")
        D = [self.matrix("D", h) for h in range(1, self.n + 1)]
        A = [self.matrix("A", h) for h in range(1, self.n + 1)]
        ident = [[F.one if i == j else F.zero for j in range(N)] for i in range(N)]
        out = {"B*C-I": _msub(_mmul(B, C, F), ident, F)}
        for h in range(self.n):
            out[f"A{h + 1}*B-D{h + 1}"] = _msub(_mmul(A[h], B, F), D[h], F)
            aB = [[F.mul(self.points[j][h], B[i][j]) for j in range(N)] for i in range(N)]
            out[f"D{h + 1}-a{h + 1}*B"] = _msub(D[h], aB, F)
            for g in range(h + 1, self.n):
                out[f"A{h + 1}*A{g + 1}-A{g + 1}*A{h + 1}"] = _msub(
                    _mmul(A[h], A[g], F), _mmul(A[g], A[h], F), F)
        return out

    def residuals_vanish(self) -> bool:
        return all(x == 0 for M in self.residuals().values() for r in M for x in r)


def normal_form(f, state: MulState) -> list:
    return state.normal_form(f)


def groebner_border(state: MulState, star: Sequence[Term]) -> list[tuple[Term, dict]]:
    """``(t, t - Nf(t))`` for every ``t`` in ``star``, in the given order."""
    F = state.field
    out = []
    for t in star:
        coeffs = state.normal_form(poly.monomial(t, F))
        g = poly.monomial(t, F)
        for c, tl in zip(coeffs, state.terms):
            if c != 0:
                g = poly.add(g, {tl: F.neg(c)}, F)
        out.append((tuple(t), g))
    return out


def mul_state(points: Sequence[Sequence], sigma_log: Sequence, field: FieldSpec = RATIONALS,
              **kw) -> MulState:
    n = len(points[0])
    st = MulState(n, field, **kw)
    for P, sg in zip(points, sigma_log):
        st.add_point(P, sg)
    return st


def _dot(u, v, F: FieldSpec):
    acc = F.zero
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def _mmul(X, Y, F: FieldSpec):
    N = len(Y[0]) if Y else 0
    cols = [[Y[k][j] for k in range(len(Y))] for j in range(N)]
    return [[_dot(r, c, F) for c in cols] for r in X]


def _msub(X, Y, F: FieldSpec):
    return [[F.sub(a, b) for a, b in zip(rx, ry)] for rx, ry in zip(X, Y)]


def gauss_inverse(M: Sequence[Sequence], F: FieldSpec = RATIONALS) -> list[list]:
    """Gauss-Jordan inverse; the from-scratch oracle for the bordered ``C``."""
    N = len(M)
    aug = [[F.coerce(x) for x in r] + [F.one if i == j else F.zero for j in range(N)]
           for i, r in enumerate(M)]
    for col in range(N):
        piv = next((r for r in range(col, N) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularPivot("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, x) for x in aug[col]]
        for r in range(N):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[r], aug[col])]
    return [r[N:] for r in aug]
