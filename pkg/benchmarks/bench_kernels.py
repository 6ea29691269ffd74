"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--no-end-to-end]

The end-to-end row times a norm-perfect search at k = 2 in two fresh
interpreters, one with GAUSSABUND_PURE=1.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from gaussabund._core import _fallback

try:
    from gaussabund._core import _kernels
except ImportError:
    _kernels = None


def _gcd_inputs(n=20_000, seed=0):
    rng = random.Random(seed)
    return [tuple(rng.randint(-(2**29), 2**29) for _ in range(4)) for _ in range(n)]


def _cases():
    inputs = _gcd_inputs()
    return [
        ("gauss_gcd x20000", lambda m: [m.gauss_gcd(*args) for args in inputs]),
        ("prime_sieve 2^20", lambda m: m.prime_sieve(1 << 20)),
        ("smallest_factor_table 2^20", lambda m: m.smallest_factor_table(1 << 20)),
        ("canonical_pairs 1..10^5", lambda m: m.canonical_pairs(1, 100_000)),
    ]


def _time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def _end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["GAUSSABUND_PURE"] = "1"
    else:
        env.pop("GAUSSABUND_PURE", None)
    code = (
        "import time; from gaussabund.search import SearchTask, run_search;"
        "t = time.perf_counter(); run_search(SearchTask('norm_perfect', 2, 1, 10000));"
        "print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--no-end-to-end", action="store_true")
    args = ap.parse_args()

    if _kernels is None:
        print("compiled kernels are not built; only the fallback can be timed")
    print("%-30s %12s %12s %9s" % ("kernel", "python [s]", "cython [s]", "speedup"))
    for name, fn in _cases():
        py = _time(lambda: fn(_fallback), args.repeat)
        if _kernels is None:
            print("%-30s %12.4f %12s %9s" % (name, py, "-", "-"))
            continue
        cy = _time(lambda: fn(_kernels), args.repeat)
        print("%-30s %12.4f %12.4f %8.1fx" % (name, py, cy, py / cy))
    if not args.no_end_to_end:
        py = _end_to_end(pure=True)
        cy = _end_to_end(pure=False)
        print("%-30s %12.4f %12.4f %8.1fx" % ("search k=2 norm<=10^4", py, cy, py / cy))


if __name__ == "__main__":
    main()
