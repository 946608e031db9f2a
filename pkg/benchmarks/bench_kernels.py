"""Benchmark: compiled slack-scan kernel vs the pure-Python fallback.

The hot loops of the minimality/extremality machinery are the slack scans
over the complex vertices (with up to 12 limit cones each) and the
all-pairs scan for the finite group model.  Run:

    python3 benchmarks/bench_kernels.py [--nbkpt N] [--q Q] [--repeat R]
"""

from __future__ import annotations

import argparse
import importlib.util
import random
import sys
import time
from pathlib import Path


def load_pure():
    path = Path(__file__).resolve().parent.parent / "src" / "groupcut" / "_scan.py"
    spec = importlib.util.spec_from_file_location("groupcut_scan_pure", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def load_compiled():
    try:
        from groupcut import _scan_c

        return _scan_c if getattr(_scan_c, "COMPILED", False) else None
    except ImportError:
        return None


def make_function(nbkpt: int, rng: random.Random):
    D = 6000
    cuts = sorted(rng.sample(range(1, D), nbkpt - 1))
    b = [0] + cuts + [D]
    V = 840
    m = len(b)
    vals = [rng.randrange(0, V + 1) for _ in range(m)]
    rights = [rng.randrange(0, V + 1) for _ in range(m)]
    lefts = [rng.randrange(0, V + 1) for _ in range(m)]
    vals[0] = rights[0] = 0
    vals[-1], rights[-1], lefts[-1] = vals[0], rights[0], lefts[0]
    return b, vals, rights, lefts, V


def bench(impl, b, vals, rights, lefts, V, q, repeat):
    pts = impl.complex_vertices(b)
    upper = [(x, y) for x, y in pts if x <= y]
    xs = [p for p, _ in upper]
    ys = [p for _, p in upper]
    t0 = time.perf_counter()
    for _ in range(repeat):
        impl.scan_slacks(b, vals, rights, lefts, V, xs, ys, True)
    t_scan = (time.perf_counter() - t0) / repeat
    rng = random.Random(7)
    dv = [rng.randrange(0, 1000) for _ in range(q + 1)]
    dv[0] = 0
    dv[-1] = dv[0]
    t0 = time.perf_counter()
    for _ in range(repeat):
        impl.scan_discrete(dv, q)
    t_disc = (time.perf_counter() - t0) / repeat
    return len(upper), t_scan, t_disc


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nbkpt", type=int, default=60)
    ap.add_argument("--q", type=int, default=1500)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(1)
    tables = make_function(args.nbkpt, rng)

    pure = load_pure()
    compiled = load_compiled()
    rows = []
    nverts, t_scan, t_disc = bench(pure, *tables, args.q, args.repeat)
    rows.append(("pure-python", t_scan, t_disc))
    if compiled is not None:
        _, c_scan, c_disc = bench(compiled, *tables, args.q, args.repeat)
        rows.append(("compiled", c_scan, c_disc))

    print(f"vertex scan: {nverts} vertices x 13 cones "
          f"({args.nbkpt} breakpoints); discrete scan: q = {args.q}")
    print(f"{'kernel':<14} {'vertex scan [s]':>16} {'discrete scan [s]':>18}")
    for name, a, d in rows:
        print(f"{name:<14} {a:>16.4f} {d:>18.4f}")
    if compiled is not None:
        print(f"{'speedup':<14} {rows[0][1] / rows[1][1]:>15.2f}x "
              f"{rows[0][2] / rows[1][2]:>17.2f}x")
    else:
        print("compiled kernel not available; install with Cython to compare")
    return 0


if __name__ == "__main__":
    sys.exit(main())
