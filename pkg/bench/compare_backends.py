#!/usr/bin/env python3
"""Benchmark the counting kernels: numba @njit vs the pure-numpy fallback.

The brute-force tables are the hot loops of the verification sweeps
(everything else is exact big-integer or mpmath work that a JIT cannot
help).  Run:

    python bench/compare_backends.py [--quick]
"""

import argparse
import time

from threesq import _kernels_numba as numba_impl
from threesq import _kernels_numpy as numpy_impl

CASES = [
    # (kernel, N-full, N-quick)
    ("r2_table", 200_000, 20_000),
    ("r3_table", 20_000, 2_000),
    ("r4_table", 5_000, 500),
    ("n3_table", 5_000, 500),
    ("tri3_table", 100_000, 10_000),
    ("signed_pair_table", 100_000, 10_000),
    ("signed_triple_table", 20_000, 2_000),
    ("solution_tables", 20_000, 2_000),
    ("divisor_tables", 100_000, 10_000),
]


def best_of(fn, arg, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller problem sizes")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"{'kernel':22s} {'N':>8s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, n_full, n_quick in CASES:
        n = n_quick if args.quick else n_full
        nb = getattr(numba_impl, name)
        np_ = getattr(numpy_impl, name)
        nb(min(n, 64))  # JIT warm-up outside the timed region
        t_nb = best_of(nb, n, args.repeats)
        t_np = best_of(np_, n, args.repeats)
        print(f"{name:22s} {n:8d} {t_nb * 1e3:9.1f}ms {t_np * 1e3:9.1f}ms {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
