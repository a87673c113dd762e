"""Benchmark the compiled short-vector kernel against the pure fallback.

Usage: python benchmarks/bench_enumeration.py [--repeats N]

Counts are asserted equal between backends before timing is reported.
"""

import argparse
import time

from k3kit import enumeration
from k3kit.lattice import standard_lattice, twist


def _cases():
    e8 = standard_lattice("E8")
    e8m2 = twist(e8, -2)
    nik = standard_lattice("NIKULIN")
    return [
        ("E8 norm 2 (roots)", e8.gram, 2),
        ("E8 norm 4", e8.gram, 4),
        ("E8 norm 8", e8.gram, 8),
        ("E8 norm 12", e8.gram, 12),
        ("E8(-2) norm 4", [[-x for x in row] for row in e8m2.gram], 4),
        ("Nikulin(-1) norm 2", [[-x for x in row] for row in nik.gram], 2),
        ("Nikulin(-1) norm 8", [[-x for x in row] for row in nik.gram], 8),
    ]


def _time(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"compiled kernel available: {enumeration.HAVE_COMPILED}")
    header = f"{'case':<24} {'count':>8} {'pure':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, gram, target in _cases():
        gram = [list(r) for r in gram]
        pure_count, pure_t = _time(
            lambda: enumeration.count_positive_definite(gram, target, force_pure=True),
            args.repeats)
        if enumeration.HAVE_COMPILED:
            fast_count, fast_t = _time(
                lambda: enumeration.count_positive_definite(gram, target),
                args.repeats)
            assert fast_count == pure_count, f"backend mismatch on {label}"
            speedup = pure_t / fast_t if fast_t > 0 else float("inf")
            print(f"{label:<24} {pure_count:>8} {pure_t * 1e3:>10.2f}ms "
                  f"{fast_t * 1e3:>10.2f}ms {speedup:>8.1f}x")
        else:
            print(f"{label:<24} {pure_count:>8} {pure_t * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")


if __name__ == "__main__":
    main()
