"""Benchmark the compiled sampling kernels against the pure numpy fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py [--repeats N]

Times basis_matrix, rational_matrix and curve_samples on a few
(degree, grid) sizes and prints the per-call ratio.  The compiled
backend must be importable; install with ``pip install -e .``.
"""

import argparse
import timeit

import numpy as np

from diskbezier import _ckernels, _pykernels

CASES = [
    (5, 101),
    (5, 1001),
    (8, 1001),
    (8, 10001),
    (15, 10001),
]


def best_time(func, repeats: int) -> float:
    number = 20
    return min(timeit.repeat(func, number=number, repeat=repeats)) / number


def bench(repeats: int) -> None:
    rng = np.random.default_rng(0)
    header = (f"{'kernel':<16}{'degree':>7}{'points':>8}"
              f"{'compiled':>12}{'pure':>12}{'speedup':>9}")
    print(header)
    print("-" * len(header))
    for degree, points in CASES:
        ts = np.linspace(0.0, 1.0, points)
        weights = rng.uniform(0.5, 3.0, degree + 1)
        px, py = rng.uniform(-100.0, 100.0, (2, degree + 1))
        radii = rng.uniform(0.0, 5.0, degree + 1)
        jobs = [
            ("basis_matrix",
             lambda impl: impl.basis_matrix(degree, ts)),
            ("rational_matrix",
             lambda impl: impl.rational_matrix(weights, ts)),
            ("curve_samples",
             lambda impl: impl.curve_samples(px, py, radii, weights, ts)),
        ]
        for name, job in jobs:
            compiled = best_time(lambda: job(_ckernels), repeats)
            pure = best_time(lambda: job(_pykernels), repeats)
            print(f"{name:<16}{degree:>7}{points:>8}"
                  f"{compiled * 1e6:>10.1f}us{pure * 1e6:>10.1f}us"
                  f"{pure / compiled:>8.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repetitions per case (default 5)")
    args = parser.parse_args()
    bench(args.repeats)


if __name__ == "__main__":
    main()
