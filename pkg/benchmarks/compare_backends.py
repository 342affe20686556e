#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the three hot kernels on representative workloads and prints a small
table.  Run from the repository root after installing the package:

    python benchmarks/compare_backends.py
"""

import random
import time

from aslattice._kernels import pure

try:
    from aslattice._kernels import _fast
except ImportError:
    _fast = None


def random_strict_order(rng, n, density=0.3):
    lt = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                lt[i] |= 1 << j
    for k in range(n):
        for i in range(n):
            if lt[i] >> k & 1:
                lt[i] |= lt[k]
    return lt


def derives(lt):
    n = len(lt)
    up = [lt[i] | (1 << i) for i in range(n)]
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if up[i] >> j & 1:
                down[j] |= 1 << i
    pred = [down[i] & ~(1 << i) for i in range(n)]
    return up, down, pred


def workload_closure(rng):
    cases = []
    for _ in range(2000):
        n = rng.randint(8, 24)
        rows = [1 << i for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.2:
                    rows[i] |= 1 << j
        cases.append(rows)
    return cases, lambda impl, case: impl.transitive_closure(case)


def workload_ideals(rng):
    cases = []
    for _ in range(120):
        n = rng.randint(12, 18)
        lt = random_strict_order(rng, n, density=0.15)
        _, down, _ = derives(lt)
        cases.append(down)
    return cases, lambda impl, case: impl.enumerate_ideal_masks(case, 1 << 20)


def workload_keys(rng):
    cases = []
    for _ in range(1500):
        n = rng.randint(6, 8)
        lt = random_strict_order(rng, n, density=0.25)
        _, _, pred = derives(lt)
        cases.append((n, lt, pred))
    return cases, lambda impl, case: impl.canonical_key(*case)


def run(impl, cases, fn):
    t0 = time.perf_counter()
    out = [fn(impl, c) for c in cases]
    return time.perf_counter() - t0, out


def main():
    if _fast is None:
        print("compiled kernels are not built; only the pure backend is available")
        return
    print(f"{'kernel':<22}{'pure':>10}{'compiled':>10}{'speedup':>9}")
    for name, maker in [
        ("transitive closure", workload_closure),
        ("ideal enumeration", workload_ideals),
        ("canonical key", workload_keys),
    ]:
        cases, fn = maker(random.Random(42))
        t_pure, out_pure = run(pure, cases, fn)
        t_fast, out_fast = run(_fast, cases, fn)
        assert out_pure == out_fast, f"backend mismatch in {name}"
        print(f"{name:<22}{t_pure:>9.3f}s{t_fast:>9.3f}s{t_pure / t_fast:>8.1f}x")


if __name__ == "__main__":
    main()
