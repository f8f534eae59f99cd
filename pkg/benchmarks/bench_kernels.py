"""Timing comparison of the compiled and pure-numpy kernel backends.

Runs the hot recurrences (diagonal kernel, Christoffel-Darboux form,
spectral sum, weighted Laguerre) on both implementations over a sweep of
spectral sizes and prints a table of per-call times and speedups.  The
compiled path is warmed once per shape so JIT compilation is excluded.

Usage: python benchmarks/bench_kernels.py [--points P] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from betasf.numerics import kernels_numba, kernels_numpy

CASES = (
    ("lue_diag", lambda m, n, x, y: m.lue_diag(n, x)),
    ("lue_cd", lambda m, n, x, y: m.lue_cd(n, x, y)),
    ("gue_sum", lambda m, n, x, y: m.gue_sum(n, x, y)),
    ("laguerre_ell1", lambda m, n, x, y: m.laguerre_ell1(n, x)),
)


def _time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run(points: int, repeat: int) -> None:
    rng = np.random.default_rng(7)
    print(f"{'case':<14} {'n':>5} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for n in (10, 100, 1000):
        x = rng.uniform(0.1, 2.0 * n, size=points)
        y = x + rng.uniform(0.01, 0.5, size=points)
        for name, call in CASES:
            call(kernels_numba, n, x, y)  # warm the JIT cache
            t_np = _time_call(lambda: call(kernels_numpy, n, x, y), repeat)
            t_nb = _time_call(lambda: call(kernels_numba, n, x, y), repeat)
            a = call(kernels_numpy, n, x, y)
            b = call(kernels_numba, n, x, y)
            scale = np.max(np.abs(a)) or 1.0
            assert np.max(np.abs(a - b)) <= 1e-12 * scale, f"{name} n={n} backends disagree"
            print(
                f"{name:<14} {n:>5} {t_np * 1e3:>10.3f}ms {t_nb * 1e3:>10.3f}ms "
                f"{t_np / t_nb:>8.1f}x"
            )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=20000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    run(args.points, args.repeat)


if __name__ == "__main__":
    main()
