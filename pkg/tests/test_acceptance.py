"""End-to-end acceptance criteria; each test prints one PASS/FAIL line."""
from __future__ import annotations

import random
import time

import pytest

from iterlex.bench import bench, growth_ratios, random_points
from iterlex.lexgame import GameState, full_run
from iterlex.monomials import lex_sorted, parse_term
from iterlex.mulmat import gauss_inverse
from iterlex.oracles import bm_escalier_oracle, cerlienco_mureddu
from iterlex.pipeline import Session
from iterlex.separators import separator_family
from iterlex.verify import run_checks

from conftest import GF, QQ, fixture_points, load_fixture


def report(capsys, number: int, title: str, ok: bool, detail: str = "") -> None:
    with capsys.disabled():
        print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}  {title}"
              + (f"  ({detail})" if detail else ""))
    assert ok, detail


def random_instances(count: int = 500, seed: int = 20240601):
    """Half over the rationals, half over GF(32003); n in 1..4, N in 1..25, coordinates -3..3."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, 4)
        N = min(rng.randint(1, 25), 7 ** n)
        pts, seen = [], set()
        while len(pts) < N:
            P = tuple(rng.randint(-3, 3) for _ in range(n))
            if P not in seen:
                seen.add(P)
                pts.append(P)
        out.append((QQ if k < count // 2 else GF, pts))
    return out


@pytest.fixture(scope="module")
def instances():
    return random_instances()


def replay_golden(points, expected):
    g = GameState(len(points[0]))
    problems = []
    t0 = time.perf_counter()
    for k, P in enumerate(points, start=1):
        g.add_point(P)
        if g.table.as_lists() != expected["table"][:k]:
            problems.append(f"M differs after point {k}")
        if g.barcode.to_json() != expected["barcodes"][k - 1]:
            problems.append(f"Bar Code differs after point {k}")
    elapsed = time.perf_counter() - t0
    return g, problems, elapsed


def test_criterion_1_eight_point_golden(capsys):
    pts = fixture_points("lexgame_8points.json")
    exp = load_fixture("lexgame_8points.expected.json")
    g, problems, elapsed = replay_golden(pts, exp)
    if g.escalier() != lex_sorted([parse_term(s, 4) for s in exp["escalier"]]):
        problems.append("escalier differs")
    if elapsed >= 0.1:
        problems.append(f"took {elapsed * 1e3:.1f} ms")
    report(capsys, 1, "8-point run: M, escalier and per-step Bar Codes", not problems,
           "; ".join(problems) or f"{elapsed * 1e3:.2f} ms")


def test_criterion_2_thirteen_point_golden(capsys):
    pts = fixture_points("grs_13points.json")
    exp = load_fixture("grs_13points.expected.json")
    g, problems, elapsed = replay_golden(pts, exp)
    if [[list(q) for q in t.queries] for t in g.traces] != exp["queries"]:
        problems.append("(s, l) pairs differ")
    if g.terms[-1] != parse_term(exp["last_term"], 4):
        problems.append(f"t_13 = {g.terms[-1]}")
    if g.escalier() != bm_escalier_oracle(pts, QQ):
        problems.append("escalier disagrees with the rank oracle")
    if elapsed >= 0.2:
        problems.append(f"took {elapsed * 1e3:.1f} ms")
    report(capsys, 2, "13-point run: (s, l) pairs, Bar Codes, correspondence", not problems,
           "; ".join(problems) or f"{elapsed * 1e3:.2f} ms")


def test_criterion_3_separators(capsys):
    pts = fixture_points("three_points.json")
    fam = separator_family(pts)
    got = [q.render() for q in fam.separators]
    want = load_fixture("three_points.expected.json")["separators"]
    expanded = {
        2: {(1, 1): 1, (1, 0): -2, (0, 1): -1, (0, 0): 2},
        3: {(1, 1): -1, (1, 0): 1, (0, 1): 1, (0, 0): -1},
    }
    ok = got == want and all(fam[i].expand(2) == {t: QQ.coerce(c) for t, c in e.items()}
                             for i, e in expanded.items())
    report(capsys, 3, "separators on {(1,0),(0,1),(0,2)}", ok, ", ".join(got))


def test_criterion_4_matrices(capsys):
    pts = fixture_points("three_points.json")
    exp = load_fixture("three_points.expected.json")
    sess = Session(2, QQ, separators=False).extend(pts)
    st = sess.matrices
    raw = lambda M: [[QQ.parse_raw(x) for x in r] for r in M]  # noqa: E731
    problems = [name for name, got, want in [
        ("B", st.matrix("B"), raw(exp["B"])),
        ("C", st.matrix("C"), raw(exp["C"])),
        ("D1", st.matrix("D", 1), raw(exp["D"][0])),
        ("D2", st.matrix("D", 2), raw(exp["D"][1])),
        ("A_x", st.matrix("A", 1), raw(exp["A"][0])),
        ("A_y", st.matrix("A", 2), raw(exp["A"][1])),
    ] if got != want]
    # y^2 = c1 + c2 x + c3 y solved directly at the three points
    Bt = [[1, x, y] for x, y in pts]
    inv = gauss_inverse(Bt, QQ)
    solve = [sum(inv[i][j] * pts[j][1] ** 2 for j in range(3)) for i in range(3)]
    if st.matrix("A", 2)[2] != solve or solve != [-2, 2, 3]:
        problems.append(f"A_y row 3 {st.matrix('A', 2)[2]} vs linear solve {solve}")
    report(capsys, 4, "B, C, D, A on the same three points", not problems, ", ".join(problems))


def test_criterion_5_oracle_equivalence(capsys, instances):
    t0 = time.perf_counter()
    bad = []
    for field, pts in instances:
        g = full_run(pts, field)
        cm = cerlienco_mureddu(pts)
        if g.terms != cm or set(g.escalier()) != set(cm) or \
                g.escalier() != bm_escalier_oracle(pts, field):
            bad.append(pts)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    report(capsys, 5, f"{len(instances)} random instances agree with both oracles", ok,
           f"{len(bad)} mismatches, {elapsed:.1f} s" + (f", first {bad[0]}" if bad else ""))


def test_criterion_6_invariants(capsys, instances):
    failures = []
    for field, pts in instances:
        for r in run_checks(pts, field):
            if not r.passed:
                failures.append(f"{r.name} on {pts}: {r.detail}")
    report(capsys, 6, "invariant suite on the same instances", not failures,
           f"{len(failures)} violations" + (f", first: {failures[0]}" if failures else ""))


def test_criterion_7_iterativity(capsys, instances):
    rng = random.Random(7)
    chosen = rng.sample(instances, 50)
    problems = []
    for field, pts in chosen:
        n = len(pts[0])
        sess = Session(n, field)
        history = []
        for P in pts:
            sess.add_point(P)
            history.append((sess.game.barcode.to_json(), sess.separators.to_json(),
                            sess.matrices.to_json()))
        final = sess.matrices.to_json()
        rows = sess.game.table.as_lists()
        for k in range(1, len(pts) + 1):
            pre = Session(n, field).extend(pts[:k])
            mats = pre.matrices.to_json()
            minor = lambda M: [r[:k] for r in M[:k]]  # noqa: E731
            if pre.game.table.as_lists() != rows[:k] or pre.game.terms != sess.game.terms[:k]:
                problems.append(f"rows differ at prefix {k} of {pts}")
            if pre.game.barcode.to_json() != history[k - 1][0]:
                problems.append(f"Bar Code differs at prefix {k} of {pts}")
            if pre.separators.to_json() != history[k - 1][1]:
                problems.append(f"separators differ at prefix {k} of {pts}")
            if mats != history[k - 1][2]:
                problems.append(f"matrices differ at prefix {k} of {pts}")
            if mats["B"] != minor(final["B"]) or \
                    any(D != minor(F) for D, F in zip(mats["D"], final["D"])):
                problems.append(f"B or D leading minor differs at prefix {k} of {pts}")
    report(capsys, 7, "prefix runs equal the incremental history on 50 instances", not problems,
           f"{len(problems)} differences" + (f", first: {problems[0]}" if problems else ""))


def test_criterion_8_performance(capsys):
    t0 = time.perf_counter()
    g = full_run(random_points(1000, 5, 0, 9, 11), GF)
    elapsed = time.perf_counter() - t0
    correspondence_ok = len(g.terms) == 1000 and len(set(g.terms)) == 1000
    rows = bench([250, 500, 1000], 5, 0, 9, 0, GF)
    ratios = growth_ratios(rows)
    ok = correspondence_ok and elapsed < 5 and all(r <= 5 for r in ratios)
    report(capsys, 8, "N=1000, n=5 over GF(32003)", ok,
           f"{elapsed:.2f} s, op growth per doubling "
           + ", ".join(f"{r:.2f}" for r in ratios))
