#!/usr/bin/env python3
"""Side-by-side benchmark of the batch kernels: numba JIT vs pure numpy.

Times each kernel on shared random inputs, reports the speedup, and
cross-checks that both backends agree to 1e-12.

Usage: python benchmarks/bench_backends.py [n_rows]
"""

import sys
import time

import numpy as np

from sltrust._kernels import numpy_backend
from sltrust.sampling import sample_simplex

try:
    from sltrust._kernels import numba_backend
except ImportError:
    numba_backend = None


def cols(rows):
    return tuple(np.ascontiguousarray(rows[:, i]) for i in range(rows.shape[1]))


def best_of(fn, args, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), np.column_stack(np.atleast_2d(out))


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    if numba_backend is None:
        print("numba not installed; nothing to compare")
        return 1

    ts = sample_simplex(n, seed=1)
    cs = sample_simplex(n, seed=2)
    tb, td, tu = cols(ts)
    cb, cd, cu = cols(cs)

    kernels = [
        ("combine_many", (tb, td, tu, cb, cd, cu)),
        ("angles_many", (tb, td, tu)),
        ("magnitude_ratio_many", (tb, td, tu)),
        ("cartesian_many", (tb, td, tu)),
    ]

    print(f"rows: {n}")
    print("Warming up numba JIT (first call compiles, not counted)...")
    t0 = time.perf_counter()
    for name, args in kernels:
        getattr(numba_backend, name)(*(a[:8] for a in args))
    print(f"warmup: {time.perf_counter() - t0:.2f}s\n")

    header = f"{'kernel':<22}{'numpy (s)':>12}{'numba (s)':>12}{'speedup':>10}{'max |diff|':>13}"
    print(header)
    print("-" * len(header))
    for name, args in kernels:
        t_np, out_np = best_of(getattr(numpy_backend, name), args)
        t_nb, out_nb = best_of(getattr(numba_backend, name), args)
        diff = float(np.abs(out_np - out_nb).max())
        status = "" if diff <= 1e-12 else "  MISMATCH"
        print(
            f"{name:<22}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x{diff:>13.2e}{status}"
        )
        if diff > 1e-12:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
