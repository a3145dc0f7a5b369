#!/usr/bin/env python3
"""Compare the compiled walk kernel against the pure-Python fallback on an
identical workload and confirm they produce identical sums.

Usage: python benchmarks/bench_walk.py [--trials N] [--n N] [--l L]
"""

import argparse
import time

from ohmwalk import _walk_py
from ohmwalk.circulant import complete_minus_opposite
from ohmwalk.walks import kernel_backend

try:
    from ohmwalk import _walk_cy
except ImportError:
    _walk_cy = None


def bench(kernel, label, args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernel.run_trials(*args)
        best = min(best, time.perf_counter() - start)
    steps = result[0]
    print(f"{label:<12} {best:8.3f}s   {steps / best / 1e6:8.1f} Msteps/s")
    return result, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=200000)
    parser.add_argument("--n", type=int, default=11)
    parser.add_argument("--l", type=int, default=2)
    parser.add_argument("--seed", type=int, default=42)
    opts = parser.parse_args()

    g = complete_minus_opposite(opts.n)
    args = (
        g.n,
        g.neighbor_offsets(),
        0,
        opts.l,
        opts.trials,
        opts.seed,
        100 * g.n * g.n,
    )
    print(
        f"graph n={opts.n} degree={g.degree}, target distance {opts.l}, "
        f"{opts.trials} trials, seed {opts.seed}"
    )
    print(f"selected backend at import: {kernel_backend()}\n")

    py_result, py_time = bench(_walk_py, "pure python", args)
    if _walk_cy is None:
        print("compiled kernel not built; nothing to compare")
        return
    cy_result, cy_time = bench(_walk_cy, "cython", args)
    assert py_result == cy_result, "kernels disagree!"
    print(f"\nidentical sums from both kernels; speedup {py_time / cy_time:.1f}x")


if __name__ == "__main__":
    main()
