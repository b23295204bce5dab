"""Timing comparison of the numba and numpy enumeration kernels.

Both kernels compute the same joint (stat1, imaj) table over a rank
range of S_n; this script times full sweeps at a few sizes, checks the
outputs agree entry for entry, and prints per-permutation costs.

Usage: python benchmarks/bench_backends.py [n_max]

The numba build is warmed once before timing so JIT compilation is not
charged to the measurement.
"""

import math
import sys
import time

from majperm import _kernels_numpy

try:
    from majperm import _kernels_numba
except ImportError:
    _kernels_numba = None


def bench(kern, n, use_inv, repeats):
    total = math.factorial(n)
    best = float("inf")
    table = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        table = kern.joint_table_range(n, 0, total, use_inv)
        best = min(best, time.perf_counter() - t0)
    return best, table


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    sizes = [n for n in (7, 8, 9, 10, 11) if n <= n_max]

    if _kernels_numba is not None:
        _kernels_numba.joint_table_range(5, 0, 120, True)  # warm the JIT

    print(f"{'n':>3} {'words':>12} {'numba':>12} {'numpy':>12} "
          f"{'ns/word (nb)':>13} {'speedup':>8}  agree")
    for n in sizes:
        total = math.factorial(n)
        repeats = 3 if total < 1_000_000 else 1
        t_np, tab_np = bench(_kernels_numpy, n, True, repeats)
        if _kernels_numba is None:
            print(f"{n:>3} {total:>12} {'-':>12} {t_np:>12.4f}")
            continue
        t_nb, tab_nb = bench(_kernels_numba, n, True, repeats)
        agree = bool((tab_nb == tab_np).all())
        print(f"{n:>3} {total:>12} {t_nb:>12.4f} {t_np:>12.4f} "
              f"{1e9 * t_nb / total:>13.1f} {t_np / t_nb:>8.1f}  {agree}")
        if not agree:
            raise SystemExit("kernel outputs disagree")


if __name__ == "__main__":
    main()
