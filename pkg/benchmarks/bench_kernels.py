"""Compare the compiled and the pure-Python mod-p row reduction.

    python benchmarks/bench_kernels.py [--sizes 50 100 200] [--repeat 3]

Prints one line per matrix size with the best time of each backend, and a
check that both produce the same reduced form.  The end-to-end timing runs
the Betti computation of Omega(sweedler4) over F_7 in a subprocess per
backend (CACTI_PURE_PYTHON selects the fallback).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from cacti.linalg import _fallback

try:
    from cacti.linalg import _kernels
except ImportError:
    _kernels = None

P = 7
E2E = ("import time; from cacti.homology import CobarComplex, betti; from cacti.catalog import sweedler4; "
       "from cacti.scalar import GF; t = time.perf_counter(); "
       "betti(CobarComplex(sweedler4(GF(7))), (0, {top})); print(time.perf_counter() - t)")


def low_rank(n: int, rng: np.random.Generator) -> np.ndarray:
    r = n // 2
    return (rng.integers(0, P, (n, r)) @ rng.integers(0, P, (r, n))) % P


def best(func, a, repeat: int) -> float:
    return min(timeit.repeat(lambda: func(a, P), number=1, repeat=repeat))


def end_to_end(top: int, pure: bool) -> float:
    env = dict(os.environ)
    env.pop("CACTI_PURE_PYTHON", None)
    if pure:
        env["CACTI_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", E2E.format(top=top)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--top", type=int, default=7, help="top degree for the end-to-end run")
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernel not built; only the fallback is available")
    rng = np.random.default_rng(0)
    print(f"{'n':>5}  {'python (s)':>11}  {'compiled (s)':>12}  {'speedup':>8}  same")
    for n in args.sizes:
        a = low_rank(n, rng)
        t_py = best(_fallback.rref_modp, a, args.repeat)
        if _kernels is None:
            print(f"{n:>5}  {t_py:>11.4f}  {'-':>12}  {'-':>8}  -")
            continue
        t_c = best(_kernels.rref_modp, a, args.repeat)
        m1, p1 = _fallback.rref_modp(a, P)
        m2, p2 = _kernels.rref_modp(a, P)
        same = p1 == p2 and np.array_equal(m1, m2)
        print(f"{n:>5}  {t_py:>11.4f}  {t_c:>12.4f}  {t_py / t_c:>7.1f}x  {'yes' if same else 'NO'}")
    py, c = end_to_end(args.top, True), end_to_end(args.top, False)
    print(f"Betti of Omega(sweedler4)/F7, degrees 0..{args.top}: python {py:.3f} s, default backend {c:.3f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
