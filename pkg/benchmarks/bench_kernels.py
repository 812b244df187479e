"""Compare the compiled mod-p matrix kernels with the pure-Python ones.

    python3 benchmarks/bench_kernels.py --sizes 100,200,400 --n 3
"""
from __future__ import annotations

import argparse
import sys

from iterlex import kernels
from iterlex.bench import random_points, time_matrices
from iterlex.lexgame import full_run
from iterlex.scalar import FieldSpec


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100,200,400")
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--field", default="fp:32003")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    field = FieldSpec.parse(args.field)
    if not kernels.HAVE_COMPILED:
        print("compiled kernels are not built; only the Python backend is available",
              file=sys.stderr)
    print("N,n,python_s,compiled_s,speedup")
    for N in (int(x) for x in args.sizes.split(",")):
        pts = random_points(N, args.n, 0, 9, args.seed)
        g = full_run(pts, field)
        py = time_matrices(g.points, g.sigma_log, field, "python")
        if kernels.HAVE_COMPILED:
            cc = time_matrices(g.points, g.sigma_log, field, "compiled")
            print(f"{N},{args.n},{py:.4f},{cc:.4f},{py / cc:.1f}")
        else:
            print(f"{N},{args.n},{py:.4f},,")
    return 0


if __name__ == "__main__":
    sys.exit(main())
