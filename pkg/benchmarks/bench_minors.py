"""Benchmark the minor-scan kernels: compiled extension vs pure-Python twin.

Workload mirrors the hot loops of the scans: exhaustive 3x3 minor zero tests
over root-of-unity power matrices.

Run:  python benchmarks/bench_minors.py [--n-max 24] [--span 5] [--repeat 3]
"""

import argparse
import itertools
import time

import numpy as np

from singres.kernels import get_backends, reduction_table_array


def workload_det_suite(mod, n_max, span):
    """Single-minor zero tests over all (n, p<q, a<b<c)."""
    triples = list(itertools.combinations(range(-span, span + 1), 3))
    zeros = 0
    for n in range(3, n_max + 1):
        table = reduction_table_array(n)
        for p in range(1, n):
            for q in range(p + 1, n):
                for a, b, c in triples:
                    if mod.det3_unity_is_zero(table, a, b, c, p, q):
                        zeros += 1
    return zeros


def workload_all_minors(mod, n_max, size):
    """all-minors scans over mid-sized supports."""
    elems = np.ascontiguousarray(np.arange(0, 2 * size, 2, dtype=np.int64))
    hits = 0
    for n in range(3, n_max + 1):
        table = reduction_table_array(n)
        for p in range(1, n):
            for q in range(p + 1, n):
                if mod.all_minors_vanish(table, elems, p, q):
                    hits += 1
    return hits


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=24)
    ap.add_argument("--span", type=int, default=5)
    ap.add_argument("--size", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = get_backends()
    names = [name for name, _ in backends]
    print(f"backends available: {', '.join(names)}")
    print(f"workload A: single minors, n <= {args.n_max}, exponent span {args.span}")
    print(f"workload B: all-minors scans, n <= {args.n_max}, |B| = {args.size}")
    print()
    rows = []
    for name, mod in backends:
        ta, za = timed(lambda: workload_det_suite(mod, args.n_max, args.span), args.repeat)
        tb, zb = timed(lambda: workload_all_minors(mod, args.n_max, args.size), args.repeat)
        rows.append((name, ta, za, tb, zb))
    print(f"{'backend':<10} {'A time':>10} {'A zeros':>9} {'B time':>10} {'B hits':>7}")
    for name, ta, za, tb, zb in rows:
        print(f"{name:<10} {ta:>9.3f}s {za:>9} {tb:>9.3f}s {zb:>7}")
    if len(rows) == 2:
        base = next(r for r in rows if r[0] == "python")
        fast = next(r for r in rows if r[0] == "compiled")
        print()
        print(f"speedup: A {base[1] / fast[1]:.1f}x, B {base[3] / fast[3]:.1f}x")
        if base[2] != fast[2] or base[4] != fast[4]:
            raise SystemExit("backend disagreement!")


if __name__ == "__main__":
    main()
