"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Times the unimodular scan behind the bounded sigma search and a batch of
small determinants, checks that both backends return the same answers,
and prints one line per workload.
"""

import argparse
import random
import sys
import time

from wittaut import kernels
from wittaut.autos import lemma23_bruteforce

S2 = [(2, 1), (3, 1), (5, 2), (7, 2)]
S3 = [(2, 1), (3, 1), (5, 2), (7, 2), (11, 3), (13, 3)]


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    for n, S, bound in ((2, S2, 8), (3, S3, 2)):
        total = (2 * bound + 1) ** (n * n)
        yield (f"scan n={n} bound={bound} ({total} matrices)",
               lambda b, n=n, S=S, bound=bound: lemma23_bruteforce(n, S, S, bound, backend=b,
                                                                  chunks=4, cap=10 ** 7))
    rng = random.Random(0)
    mats = [tuple(rng.randint(-9, 9) for _ in range(16)) for _ in range(20000)]

    def dets(b):
        f = kernels.backend(b).det_small
        return [f(m, 4) for m in mats]
    yield "det_small 4x4 x 20000", dets


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    try:
        kernels.backend("cython")
    except ImportError:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        tp, rp = _best(lambda: fn("python"), args.repeat)
        tc, rc = _best(lambda: fn("cython"), args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:40s} {tp:10.3f} {tc:10.3f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
