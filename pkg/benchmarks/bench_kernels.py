"""Compare the compiled and pure-Python GF(p) kernels.

    python benchmarks/bench_kernels.py [--sizes 8,16,32,48] [--prime 3] [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

from binomat import kernels
from binomat.numbers import binom


def r_matrix(n: int) -> list[list[int]]:
    return [[binom(i, n - 1 - j) for j in range(n)] for i in range(n)]


def best_of(fn, repeat: int) -> float:
    number, _ = timeit.Timer(fn).autorange()
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,16,32,48")
    ap.add_argument("--prime", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    backends = ["python"] + (["cython"] if kernels.compiled_available() else [])
    if len(backends) == 1:
        print("compiled kernels not built; timing the pure-Python backend only")
    p = args.prime
    print(f"{'kernel':<14}{'n':>4}" + "".join(f"{b:>14}" for b in backends) + ("   speedup" if len(backends) == 2 else ""))
    for n in map(int, args.sizes.split(",")):
        a = r_matrix(n)
        cases = {
            "berkowitz": lambda b: kernels.berkowitz_mod(a, p, b),
            f"matpow^{p + 1}": lambda b: kernels.matpow_mod(a, p + 1, p, b),
            "matmul": lambda b: kernels.matmul_mod(a, a, p, b),
        }
        for name, fn in cases.items():
            ref = fn("python")
            assert all(list(fn(b)) == list(ref) for b in backends)  # same answer before timing
            secs = [best_of(lambda b=b: fn(b), args.repeat) for b in backends]
            row = f"{name:<14}{n:>4}" + "".join(f"{s * 1e6:>12.1f}us" for s in secs)
            if len(secs) == 2:
                row += f"{secs[0] / secs[1]:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
