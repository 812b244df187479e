"""Empirical cost measurements: operation counters and wall time."""
from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import asdict, dataclass
from typing import Sequence

from .lexgame import GameState
from .mulmat import MulState
from .scalar import FieldSpec


@dataclass
class BenchRow:
    N: int
    n: int
    r: int
    seconds: float
    trie_ops: int
    bar_ops: int


def random_points(N: int, n: int, lo: int, hi: int, seed: int) -> list[tuple[int, ...]]:
    """``N`` distinct points with integer coordinates in ``lo..hi`` (seeded)."""
    if (hi - lo + 1) ** n < N:
        raise ValueError(f"only {(hi - lo + 1) ** n} distinct points in the box")
    rng = random.Random(seed)
    seen: set = set()
    out = []
    while len(out) < N:
        P = tuple(rng.randint(lo, hi) for _ in range(n))
        if P not in seen:
            seen.add(P)
            out.append(P)
    return out


def run_escalier(points: Sequence[Sequence], field: FieldSpec) -> BenchRow:
    n = len(points[0])
    g = GameState(n, field)
    t0 = time.perf_counter()
    g.extend(points)
    dt = time.perf_counter() - t0
    return BenchRow(len(points), n, g.trie.max_branching(), dt, g.trie.ops, g.barcode.ops)


def bench(sizes: Sequence[int], n: int, lo: int, hi: int, seed: int,
          field: FieldSpec) -> list[BenchRow]:
    return [run_escalier(random_points(N, n, lo, hi, seed + k), field)
            for k, N in enumerate(sizes)]


def growth_ratios(rows: Sequence[BenchRow]) -> list[float]:
    """Ratio of trie+bar op counts between consecutive rows."""
    tot = [r.trie_ops + r.bar_ops for r in rows]
    return [b / a for a, b in zip(tot, tot[1:]) if a]


def time_matrices(points: Sequence[Sequence], sigma_log, field: FieldSpec, backend: str) -> float:
    st = MulState(len(points[0]), field, backend=backend)
    t0 = time.perf_counter()
    for P, sg in zip(points, sigma_log):
        st.add_point(P, sg)
    return time.perf_counter() - t0


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["N", "n", "r", "seconds", "trie_ops", "bar_ops"],
                       lineterminator="\n")
    w.writeheader()
    for r in rows:
        d = asdict(r)
        d["seconds"] = f"{r.seconds:.6f}"
        w.writerow(d)
    return buf.getvalue()
