"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-len 6]

Times the kernel-word screen for [2,2,2] and the Sp(4,3) enumeration on each
backend, and checks that both backends return identical results.
"""

import argparse
import time
from fractions import Fraction

import numpy as np

from heckejones import _kernels, finite
from heckejones.jones import build_jones
from heckejones.search import MODULUS, screen_words, specialize_mod
from heckejones.tableaux import YoungDiagram


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=6)
    args = ap.parse_args()

    backends = sorted(_kernels.BACKENDS)
    gens = specialize_mod(build_jones(YoungDiagram((2, 2, 2))), Fraction(3, 7), MODULUS)
    mats = np.random.default_rng(0).integers(0, 3, size=(200_000, 4, 4))

    results = {}
    for name in backends:
        kern = _kernels.get_backend(name)
        # warm the jit cache outside the timed region
        screen_words(gens, 2, MODULUS, 1, name)
        finite.bfs_enumerate(3, backend=name)
        kern["encode"](mats[:2], 3)

        t_search, hits = best_of(lambda: screen_words(gens, args.max_len, MODULUS, 1, name), args.repeat)
        t_bfs, table = best_of(lambda: finite.bfs_enumerate(3, backend=name), args.repeat)
        t_mm, prod = best_of(lambda: kern["encode"](kern["matmul_mod"](mats, mats[0], 3), 3), args.repeat)
        results[name] = (hits, table.codes, prod)
        print(f"{name:6s} search[2,2,2] len<={args.max_len}: {t_search:7.3f}s  ({len(hits)} hits)")
        print(f"{name:6s} Sp(4,3) BFS:                  {t_bfs:7.3f}s  ({len(table)} elements)")
        print(f"{name:6s} matmul+encode 200k 4x4:       {t_mm:7.3f}s")

    if len(backends) == 2:
        a, b = (results[n] for n in backends)
        same = a[0] == b[0] and np.array_equal(a[1], b[1]) and np.array_equal(a[2], b[2])
        print("backends agree:", same)


if __name__ == "__main__":
    main()
