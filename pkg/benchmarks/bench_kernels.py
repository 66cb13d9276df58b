"""Numba loops vs plain numpy for the truncated-series kernels.

    python3 benchmarks/bench_kernels.py [--repeat 50]

Also times one end-to-end check in a subprocess with and without
RRCAUCHY_DISABLE_NUMBA=1.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from rrcauchy import _kernels as K

PAIRS = [
    ("convolve_trunc", K.convolve_trunc_numba, K.convolve_trunc_numpy),
    ("divide_one_minus", K.divide_one_minus_numba, K.divide_one_minus_numpy),
    ("multiply_one_minus", K.multiply_one_minus_numba, K.multiply_one_minus_numpy),
]


def _args(name, n, rng):
    a = rng.integers(-1000, 1000, n + 1, dtype=np.int64)
    if name == "convolve_trunc":
        return (a, rng.integers(-1000, 1000, n + 1, dtype=np.int64), n)
    return (a, 7)


def bench_kernels(sizes, repeat):
    rng = np.random.default_rng(0)
    print(f"{'kernel':20s} {'n':>6s} {'numba us':>10s} {'numpy us':>10s} {'ratio':>7s}")
    for name, fast, ref in PAIRS:
        for n in sizes:
            args = _args(name, n, rng)
            assert np.array_equal(fast(*args), ref(*args))
            t_fast = min(timeit.repeat(lambda: fast(*args), number=repeat, repeat=3)) / repeat
            t_ref = min(timeit.repeat(lambda: ref(*args), number=repeat, repeat=3)) / repeat
            print(f"{name:20s} {n:6d} {t_fast * 1e6:10.1f} {t_ref * 1e6:10.1f} {t_ref / t_fast:7.2f}")


def bench_end_to_end():
    code = (
        "import time; from rrcauchy.harness import verify_rr, verify_cauchy_mod;"
        "verify_rr('first', 50);"
        "t = time.perf_counter(); verify_rr('first', 400); verify_cauchy_mod(1, 2, 120);"
        "print(round((time.perf_counter() - t) * 1000))"
    )
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, RRCAUCHY_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        print(f"rr(400) + cauchy(120) with {label}: {out.stdout.strip()} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=50)
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 256, 1024, 4096])
    args = ap.parse_args()
    if not K.USING_NUMBA:
        print("note: numba path disabled in this process; both columns run the same code shape")
    bench_kernels(args.sizes, args.repeat)
    bench_end_to_end()


if __name__ == "__main__":
    main()
