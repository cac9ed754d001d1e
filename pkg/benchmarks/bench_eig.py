"""Benchmark the Jacobi eigensolver backends against each other.

Runs the compiled kernel and the pure NumPy fallback on identical matrices,
reports wall time per decomposition and checks that the two backends return
bit-identical results (they share the same rotation order and arithmetic).

Usage: python benchmarks/bench_eig.py [--sizes 4,8,16,32] [--repeats 20]
"""

import argparse
import time

import numpy as np

from framekit import _jacobi_py

try:
    from framekit import _kernels
except ImportError:
    _kernels = None

MAX_SWEEPS = 60


def make_hermitian(rng, n, complex_field):
    a = rng.standard_normal((n, n))
    if complex_field:
        a = a + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2.0


def run(backend, work, complex_field):
    target = 1e-12 * float(np.linalg.norm(work))
    if complex_field:
        return backend.jacobi_eig_complex(work, target, MAX_SWEEPS)
    return backend.jacobi_eig_real(work, target, MAX_SWEEPS)


def time_backend(backend, matrices, complex_field, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for work in matrices:
            run(backend, work, complex_field)
        best = min(best, (time.perf_counter() - start) / len(matrices))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,12,16,24,32")
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--batch", type=int, default=8, help="matrices per size")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels is None:
        print("compiled kernel not built; timing the pure NumPy fallback only")

    rng = np.random.default_rng(0)
    header = f"{'size':>5} {'field':>8} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8} {'identical':>10}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        for complex_field in (False, True):
            matrices = [make_hermitian(rng, n, complex_field) for _ in range(args.batch)]
            py_time = time_backend(_jacobi_py, matrices, complex_field, args.repeats)
            if _kernels is None:
                print(f"{n:>5} {'complex' if complex_field else 'real':>8} {py_time * 1e3:>12.3f} {'-':>12} {'-':>8} {'-':>10}")
                continue
            cy_time = time_backend(_kernels, matrices, complex_field, args.repeats)
            identical = all(
                np.array_equal(pv, cv) and np.array_equal(pw, cw) and ps == cs
                for work in matrices
                for (pv, pw, ps, _), (cv, cw, cs, _) in [
                    (run(_jacobi_py, work, complex_field), run(_kernels, work, complex_field))
                ]
            )
            print(
                f"{n:>5} {'complex' if complex_field else 'real':>8} "
                f"{py_time * 1e3:>12.3f} {cy_time * 1e3:>12.3f} "
                f"{py_time / cy_time:>8.1f} {str(identical):>10}"
            )


if __name__ == "__main__":
    main()
