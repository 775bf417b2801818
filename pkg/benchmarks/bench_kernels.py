"""Numba vs numpy timings for the sampling and counting kernels.

    python benchmarks/bench_kernels.py [--paths 64] [--depth 65536] [--repeat 5]

Both paths are called directly, so the env flag does not matter here. The
first numba call (compilation or cache load) is excluded from the timings.
"""
import argparse
import time

import numpy as np

from ergodic_spectrum import kernels
from ergodic_spectrum._accel import HAVE_NUMBA


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--paths", type=int, default=64)
    ap.add_argument("--depth", type=int, default=1 << 16)
    ap.add_argument("--enum", type=int, default=18, help="word length for exhaustive counts")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed")

    keys = kernels.stream_keys(42, 0, args.paths)
    p, q = 0.6, 0.3
    words = kernels.sample_paths_numpy(keys, args.depth, p, q)

    cases = [
        ("sample_paths", lambda: kernels.sample_paths_numba(keys, args.depth, p, q),
         lambda: kernels.sample_paths_numpy(keys, args.depth, p, q)),
        ("word_counts", lambda: kernels.word_counts_numba(words, args.depth),
         lambda: kernels.word_counts_numpy(words, args.depth)),
        ("enumerate_counts", lambda: kernels.enumerate_counts_numba(args.enum),
         lambda: kernels.enumerate_counts_numpy(args.enum)),
    ]

    print(f"paths={args.paths} depth={args.depth} enum={args.enum} repeat={args.repeat}")
    print(f"{'kernel':<18}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}")
    for name, fast, slow in cases:
        a, b = fast(), slow()
        if not np.array_equal(a, b):
            raise SystemExit(f"{name}: numba and numpy outputs differ")
        t_fast = best_of(fast, args.repeat)
        t_slow = best_of(slow, args.repeat)
        print(f"{name:<18}{1e3 * t_fast:>12.2f}{1e3 * t_slow:>12.2f}{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
