#!/usr/bin/env python3
"""Benchmark the pure-Python reduction kernel against the compiled one.

Workloads are the reduction-heavy paths that dominate real usage: toric
kernel elimination, the Groebner basis of a symmetrized lift, and a batch
of random binomial ideals.  Results from both kernels are compared for
equality before timings are reported.

Usage: python bench/bench_kernel.py [--quick]
"""

import argparse
import random
import time

from symgb import _ring
from symgb import (
    CapExceeded,
    FiniteIdeal,
    level_universe,
    squarefree_spec,
    symmetrize,
    toric_chain,
    toric_kernel,
)
from symgb.gb import coordinate_universe


def workload_elimination(level):
    def run():
        return toric_kernel(squarefree_spec(2), level).groebner_basis()

    return f"kernel elimination, k=2, n={level}", run


def workload_lift(source, target):
    def run():
        chain = toric_chain(squarefree_spec(2))
        lifted = symmetrize(list(chain.generators(source)), target)
        return FiniteIdeal(lifted, level_universe(2, target)).groebner_basis()

    return f"lifted-basis GB, k=2, {source}->{target}", run


def workload_random_binomials(count):
    def run():
        rng = random.Random(2024)
        out = []
        universe = coordinate_universe(5)
        for _ in range(count):
            gens = []
            for _ in range(4):
                e1 = tuple(rng.randint(0, 2) for _ in range(5))
                e2 = tuple(rng.randint(0, 2) for _ in range(5))
                from symgb import Monomial, Polynomial, x_

                m1 = Monomial({x_(i + 1): e for i, e in enumerate(e1) if e})
                m2 = Monomial({x_(i + 1): e for i, e in enumerate(e2) if e})
                if m1 != m2:
                    gens.append(Polynomial.from_monomial(m1) - Polynomial.from_monomial(m2))
            if not gens:
                continue
            try:
                out.append(FiniteIdeal(gens, universe).groebner_basis())
            except CapExceeded:
                # runaway instances are skipped identically under both kernels
                out.append("capped")
        return out

    return f"{count} random binomial ideals in 5 variables", run


def measure(run):
    start = time.perf_counter()
    result = run()
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    parser.add_argument("--full", action="store_true",
                        help="include the level-6 elimination (tens of seconds pure)")
    args = parser.parse_args()

    if args.quick:
        workloads = [workload_elimination(4), workload_lift(3, 4), workload_random_binomials(20)]
    else:
        workloads = [workload_elimination(5), workload_lift(4, 6), workload_random_binomials(60)]
        if args.full:
            workloads.insert(1, workload_elimination(6))

    try:
        _ring.use_kernel("c")
    except ImportError:
        print("compiled kernel unavailable; build it with: pip install -e .")
        return

    header = f"{'workload':<42} {'pure (s)':>9} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, run in workloads:
        _ring.use_kernel("py")
        t_py, ref = measure(run)
        _ring.use_kernel("c")
        t_c, got = measure(run)
        assert got == ref, f"kernel results disagree on: {name}"
        print(f"{name:<42} {t_py:>9.2f} {t_c:>13.2f} {t_py / t_c:>7.1f}x")
    _ring.use_kernel()


if __name__ == "__main__":
    main()
