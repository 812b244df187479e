"""One object driving the game, the separators and the matrices together."""
from __future__ import annotations

from typing import Iterable, Sequence

from .barcode import BarCode
from .errors import DimensionMismatch, InconsistentState
from .lexgame import GameState
from .mulmat import MulState, groebner_border
from .scalar import RATIONALS, FieldSpec
from .separators import LinearFactor, Separator, SeparatorFamily

STATE_FORMAT = "iterlex-state/1"


class Session:
    """Incremental session over an ordered point set.

    A failing step (duplicate point, internal inconsistency in any component)
    leaves the session exactly as it was before the step.
    """

    def __init__(self, n: int, field: FieldSpec = RATIONALS, separators: bool = True,
                 matrices: bool = True, check: bool = False, backend: str | None = None,
                 keep_history: bool = False):
        self.n = n
        self.field = field
        self.game = GameState(n, field)
        self.separators = SeparatorFamily(n, field) if separators else None
        self.matrices = (MulState(n, field, backend=backend, check=check,
                                  keep_history=keep_history) if matrices else None)

    def __len__(self):
        return len(self.game)

    @property
    def points(self) -> list[tuple]:
        return self.game.points

    def add_point(self, point: Sequence):
        if len(point) != self.n:
            raise DimensionMismatch(
                f"point {len(self) + 1} has {len(point)} coordinates, expected {self.n}")
        before = len(self.game)
        seps = list(self.separators.separators) if self.separators is not None else None
        term = self.game.add_point(point)
        try:
            if self.separators is not None:
                self.separators.add_point(self.game.trie, self.game.points)
            if self.matrices is not None:
                # raises before touching any matrix
                self.matrices.add_point(self.game.points[-1], self.game.sigma_log[-1])
        except Exception:
            if len(self.game) > before:
                self.game.undo_last()
            if seps is not None:
                self.separators.separators = seps
            raise
        return term

    def extend(self, points: Iterable[Sequence]) -> "Session":
        for p in points:
            self.add_point(p)
        return self

    def groebner(self):
        if self.matrices is None:
            raise InconsistentState("Groebner border needs the matrices")
        return groebner_border(self.matrices, self.game.barcode.star_set())

    # state export -----------------------------------------------------------
    def export_state(self) -> dict:
        f = self.field
        g = self.game
        out = {
            "format": STATE_FORMAT,
            "field": str(f),
            "n": self.n,
            "points": [[f.render(a) for a in P] for P in g.points],
            "table": g.table.as_lists(),
            "barcode": g.barcode.to_json(),
            "sigma": [list(x) if x else None for x in g.sigma_log],
            "writes": g.table.writes,
        }
        if self.separators is not None:
            out["separators"] = [[f2.to_json(f) for f2 in q.factors]
                                 for q in self.separators.separators]
        if self.matrices is not None:
            out["matrices"] = self.matrices.to_json()
        return out

    @classmethod
    def import_state(cls, data: dict, check: bool = False,
                     backend: str | None = None) -> "Session":
        """Rebuild a session from :meth:`export_state` output without replaying
        the game: the trie is rebuilt from the points (it is a function of
        them), every other structure is loaded as stored."""
        if data.get("format") != STATE_FORMAT:
            raise InconsistentState(f"unknown state format {data.get('format')!r}")
        field = FieldSpec.parse(data["field"])
        n = int(data["n"])
        sess = cls(n, field, separators="separators" in data, matrices="matrices" in data,
                   check=check, backend=backend)
        g = sess.game
        pts = [tuple(field.parse_raw(str(a)) for a in P) for P in data["points"]]
        for P in pts:
            g.trie.extend(P)
        g.points = pts
        g.table.rows = [list(r) for r in data["table"]]
        g.table.writes = int(data.get("writes", len(pts) * n))
        g.barcode = BarCode.from_json(data["barcode"], n) if pts else BarCode(n)
        g.sigma_log = [tuple(x) if x else None for x in data["sigma"]]
        if sess.separators is not None:
            fam = sess.separators
            for i, facs in enumerate(data["separators"], start=1):
                fam.separators.append(Separator(i, tuple(
                    LinearFactor(int(d["var"]), field.parse_raw(d["root"]),
                                 field.parse_raw(d["scale"])) for d in facs), field))
        if sess.matrices is not None:
            _load_matrices(sess.matrices, data["matrices"], pts, g)
        return sess


def _load_matrices(st: MulState, data: dict, pts, game: GameState) -> None:
    f = st.field
    k = st.kernels
    dec = lambda M: [[f.parse_raw(x) for x in r] for r in M]  # noqa: E731

    def load(target, rows):
        for i, r in enumerate(rows):
            k.border(target, [rows[h][i] for h in range(i)], r[: i + 1])

    load(st.B, dec(data["B"]))
    load(st.C, dec(data["C"]))
    for h in range(st.n):
        load(st.D[h], dec(data["D"][h]))
        load(st.A[h], dec(data["A"][h]))
    st.points = list(pts)
    st.terms = game.table.terms()
    st.sigma = list(game.sigma_log)
