"""Command line front end.

Exit status: 0 on success, 1 for bad input, 2 when an internal invariant fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import poly
from .bench import bench, growth_ratios, random_points, to_csv
from .errors import InputError, InternalError, IterlexError
from .io import PointSet, dumps, load_points
from .monomials import divides, render_term
from .pipeline import Session
from .scalar import FieldSpec
from .verify import run_checks

def _term_json(t) -> dict:
    return {"term": render_term(t), "exponents": list(t)}


def _load(args) -> PointSet:
    field = FieldSpec.parse(args.field) if args.field else None
    if args.input in (None, "-"):
        return load_points(None, args.format or "json", field, text=sys.stdin.read())
    return load_points(args.input, args.format, field)


def _session(ps: PointSet, args, separators: bool, matrices: bool) -> Session:
    return Session(ps.n, ps.field, separators=separators, matrices=matrices,
                   check=getattr(args, "check", False)).extend(ps.points)


def _escalier_doc(sess: Session) -> dict:
    g = sess.game
    return {
        "escalier": [_term_json(t) for t in g.escalier()],
        "correspondence": [dict(point=i, **_term_json(t)) for i, t in enumerate(g.terms, 1)],
        "table": g.table.as_lists(),
        "barcode": g.barcode.to_json(),
        "starset": [_term_json(t) for t in g.barcode.star_set()],
    }


def _groebner_doc(sess: Session) -> dict:
    f = sess.field
    border = sess.groebner()
    stars = [t for t, _ in border]
    minimal = {t for t in stars if not any(u != t and divides(u, t) for u in stars)}
    return {
        "border": [{"lead": render_term(t), "polynomial": poly.render(g, f),
                    "coefficients": poly.to_json(g, f), "reduced_basis": t in minimal}
                   for t, g in border],
    }


def _matrices_doc(sess: Session, check: bool) -> dict:
    st = sess.matrices
    doc = {"matrices": st.to_json()}
    if check:
        f = sess.field
        doc["residuals"] = {k: [[f.render(x) for x in r] for r in M]
                            for k, M in st.residuals().items()}
        doc["residuals_vanish"] = st.residuals_vanish()
    return doc


def _header(ps_or_sess) -> dict:
    return {"field": str(ps_or_sess.field), "n": ps_or_sess.n, "N": len(ps_or_sess.points)}


def cmd_escalier(args) -> int:
    ps = _load(args)
    sess = _session(ps, args, separators=False, matrices=False)
    _emit(args, {**_header(ps), **_escalier_doc(sess)})
    return 0


def cmd_separators(args) -> int:
    ps = _load(args)
    sess = _session(ps, args, separators=True, matrices=False)
    _emit(args, {**_header(ps), "separators": sess.separators.to_json()})
    return 0


def cmd_matrices(args) -> int:
    ps = _load(args)
    sess = _session(ps, args, separators=False, matrices=True)
    doc = {**_header(ps), "terms": [render_term(t) for t in sess.game.terms]}
    doc.update(_matrices_doc(sess, args.check))
    _emit(args, doc)
    return 0 if not args.check or doc["residuals_vanish"] else 2


def cmd_groebner(args) -> int:
    ps = _load(args)
    sess = _session(ps, args, separators=False, matrices=True)
    _emit(args, {**_header(ps), **_groebner_doc(sess)})
    return 0


def cmd_verify(args) -> int:
    field = FieldSpec.parse(args.field) if args.field else None
    reports = []
    if args.random:
        f = field or FieldSpec.parse("rational")
        for k in range(args.random):
            seed = args.seed + k
            pts = random_points(min(args.points, (args.hi - args.lo + 1) ** args.n),
                                args.n, args.lo, args.hi, seed)
            res = run_checks(pts, f)
            reports.append({"seed": seed, "N": len(pts), "checks": [r.to_json() for r in res]})
    else:
        ps = _load(args)
        res = run_checks(ps.points, ps.field)
        reports.append({**_header(ps), "checks": [r.to_json() for r in res]})
    ok = all(c["passed"] for rep in reports for c in rep["checks"])
    _emit(args, {"passed": ok, "instances": reports})
    return 0 if ok else 2


def cmd_bench(args) -> int:
    field = FieldSpec.parse(args.field or "fp:32003")
    sizes = [int(x) for x in args.sizes.split(",")]
    rows = bench(sizes, args.n, args.lo, args.hi, args.seed, field)
    text = to_csv(rows)
    ratios = growth_ratios(rows)
    if ratios:
        text += "# op growth per step: " + ",".join(f"{r:.3f}" for r in ratios) + "\n"
    _write(args, text)
    return 0


def cmd_export_state(args) -> int:
    ps = _load(args)
    sess = _session(ps, args, separators=True, matrices=not args.no_matrices)
    _emit(args, sess.export_state())
    return 0


def cmd_resume(args) -> int:
    try:
        data = json.loads(Path(args.state).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read state {args.state}: {exc}") from None
    sess = Session.import_state(data, check=args.check)
    if args.input is not None:
        ps = load_points(args.input, args.format, sess.field) if args.input != "-" else \
            load_points(None, args.format or "json", sess.field, text=sys.stdin.read())
        if ps.n != sess.n:
            raise InputError(f"state has n={sess.n}, new points have n={ps.n}")
        before = len(sess)
        for k, P in enumerate(ps.points, start=1):
            try:
                sess.add_point(P)
            except InputError as exc:
                raise type(exc)(f"appended point {k} (overall {before + k}): {exc}") from None
    if args.emit == "state":
        _emit(args, sess.export_state())
        return 0
    doc = {"field": str(sess.field), "n": sess.n, "N": len(sess)}
    doc.update(_escalier_doc(sess))
    if sess.separators is not None:
        doc["separators"] = sess.separators.to_json()
    if sess.matrices is not None:
        doc.update(_matrices_doc(sess, args.check))
    _emit(args, doc)
    return 0


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit(args, doc) -> None:
    _write(args, dumps(doc))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iterlex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--input", "-i", default="-",
                        help="point file (JSON or CSV); '-' reads standard input")
        sp.add_argument("--field", default=None, help="'rational' or 'fp:<p>' (overrides the file)")
        sp.add_argument("--format", choices=["json", "csv"], default=None,
                        help="input format (default: from the file suffix)")
        sp.add_argument("--output", "-o", default=None, help="write here instead of stdout")
        sp.add_argument("--check", action="store_true",
                        help="cross-check incremental updates against direct computation")

    for name, fn, help_ in [
        ("escalier", cmd_escalier, "escalier, correspondence, Bar Code and star set"),
        ("separators", cmd_separators, "squarefree separator polynomials"),
        ("matrices", cmd_matrices, "evaluation matrix, its inverse and multiplication matrices"),
        ("groebner", cmd_groebner, "border polynomials t - Nf(t) over the star set"),
        ("export-state", cmd_export_state, "dump the full incremental state as JSON"),
    ]:
        sp = sub.add_parser(name, help=help_)
        common(sp)
        if name == "export-state":
            sp.add_argument("--no-matrices", action="store_true")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify", help="run the invariant suite")
    common(sp)
    sp.add_argument("--random", type=int, default=0, metavar="K",
                    help="check K seeded random instances instead of --input")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--points", type=int, default=20, help="points per random instance")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--lo", type=int, default=-3)
    sp.add_argument("--hi", type=int, default=3)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="CSV of op counters and wall time")
    sp.add_argument("--sizes", default="250,500,1000")
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--lo", type=int, default=0)
    sp.add_argument("--hi", type=int, default=9)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--field", default=None)
    sp.add_argument("--output", "-o", default=None)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("resume", help="append points to an exported state")
    sp.add_argument("--state", required=True)
    sp.add_argument("--input", "-i", default=None)
    sp.add_argument("--format", choices=["json", "csv"], default=None)
    sp.add_argument("--emit", choices=["state", "outputs"], default="outputs")
    sp.add_argument("--output", "-o", default=None)
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_resume)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except IterlexError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
