"""Compare the compiled and pure-Python kernels on the hot operations.

Row reduction and matrix multiplication dominate everything the package
computes (nullspaces, covers, syzygies, Ext/Tor ranks), so this is the
number that decides whether an instance family is comfortable to run.

Usage: python benchmarks/bench_kernel.py [size] [repeats]
"""

import random
import sys
import time
from fractions import Fraction

from skewrec import _purekernel

try:
    from skewrec import _fastkernel
except ImportError:
    _fastkernel = None


def bench(func, *args, repeats=3):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        func(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def fmt(seconds):
    return f"{seconds * 1e3:9.2f} ms"


def main():
    size = int(sys.argv[1]) if len(sys.argv) > 1 else 120
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    rng = random.Random(0)
    p = 101
    rows_mod = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
    rows_q = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
               for _ in range(size // 3)] for _ in range(size // 3)]
    a_mod = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
    b_mod = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
    a_q = rows_q
    b_q = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            for _ in range(size // 3)] for _ in range(size // 3)]

    cases = [
        (f"rref  F_{p}   {size}x{size}", "rref", (rows_mod, size, p)),
        (f"rref  Q     {size // 3}x{size // 3}", "rref", (rows_q, size // 3, 0)),
        (f"matmul F_{p}  {size}x{size}", "matmul", (a_mod, b_mod, p)),
        (f"matmul Q    {size // 3}x{size // 3}", "matmul", (a_q, b_q, 0)),
    ]
    print(f"{'case':<28} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for label, op, args in cases:
        pure = bench(getattr(_purekernel, op), *args, repeats=repeats)
        if _fastkernel is None:
            print(f"{label:<28} {fmt(pure)} {'n/a':>12}")
            continue
        fast = bench(getattr(_fastkernel, op), *args, repeats=repeats)
        # agreement of the two backends is covered by the test suite
        print(f"{label:<28} {fmt(pure)} {fmt(fast)} {pure / fast:8.1f}x")
    if _fastkernel is None:
        print("compiled kernel not built; install with a C compiler to compare")


if __name__ == "__main__":
    main()
