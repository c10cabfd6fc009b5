"""Compare the numba and pure-numpy kernel paths.

    python benchmarks/bench_kernels.py [--repeat 5] [--splits 200]

Kernel timings call both backends directly.  The end-to-end row runs
split_any in a child process per backend, since the backend is fixed at
import time by GF2SPLIT_DISABLE_JIT.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from gf2split import kernels
from gf2split.field import make_field

F16 = make_field(4)
F2 = make_field(1)

END_TO_END = """
import time, numpy as np
from gf2split.field import make_field
from gf2split.matrix import random_matrix
from gf2split.splitter import split_any
F = make_field(4); rng = np.random.default_rng(0)
split_any(random_matrix(12, F, rng))  # warm-up (and compilation)
t = time.perf_counter()
for _ in range({count}):
    split_any(random_matrix(12, F, rng))
print((time.perf_counter() - t) / {count})
"""


def cases(rng):
    A12 = rng.integers(0, 16, size=(12, 12))
    B12 = rng.integers(0, 16, size=(12, 12))
    v12 = rng.integers(0, 16, size=12)
    f = rng.integers(0, 16, size=13)
    f[-1] = 1
    quartic = np.array([0b1000, 0b0001, 0b0010, 0b1100], dtype=np.int64)
    return [
        ("matmul 12x12", "matmul", (A12, B12, *F16.args)),
        ("rref 12x12", "rref", (A12, *F16.args)),
        ("local_minpoly 12", "local_minpoly", (A12, v12, *F16.args)),
        ("hessenberg_charpoly 12", "hessenberg_charpoly", (A12, *F16.args)),
        ("poly_frobenius_x deg 12", "poly_frobenius_x", (f, *F16.args)),
        ("f2_search 4x4 full", "f2_search", (quartic, 4, 2, 3, 0, 1 << 16)),
        ("square_zero_scan 4x4 GF(2)", "square_zero_scan", (4, *F2.args, 0, 1 << 16)),
    ]


def bench(fn, args, repeat):
    fn(*args)  # compile / warm caches
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05 and number < 1 << 16:
        number *= 2
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def end_to_end(backend, count):
    env = dict(os.environ)
    env.pop("GF2SPLIT_DISABLE_JIT", None)
    if backend == "numpy":
        env["GF2SPLIT_DISABLE_JIT"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END.format(count=count)], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--splits", type=int, default=200, help="split_any calls per backend")
    args = parser.parse_args()

    jit = kernels.load_backend("numba")
    npy = kernels.load_backend("numpy")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<30}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for label, name, call_args in cases(rng):
        t_jit = bench(getattr(jit, name), call_args, args.repeat)
        t_npy = bench(getattr(npy, name), call_args, args.repeat)
        print(f"{label:<30}{t_jit * 1e6:>10.1f}us{t_npy * 1e6:>10.1f}us{t_npy / t_jit:>9.1f}x")
    t_jit = end_to_end("numba", args.splits)
    t_npy = end_to_end("numpy", max(1, args.splits // 10))
    print(f"{'split_any 12x12 GF(16)':<30}{t_jit * 1e3:>10.2f}ms{t_npy * 1e3:>10.2f}ms{t_npy / t_jit:>9.1f}x")


if __name__ == "__main__":
    main()
