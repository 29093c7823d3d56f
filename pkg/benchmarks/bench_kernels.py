#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure NumPy fallback.

Runs the hot operations (rank tables, per-vector ranks, codeword
enumeration, covering/maximality sweeps) on fixed workloads through both
backends and prints a timing table.  Results are asserted equal before
timings are reported, so the numbers always describe the same computation.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from rankcodes import _kernels_py
from rankcodes.codes import (
    _contrib_table,
    cartesian_power,
    default_generator_vector,
    make_gabidulin,
)
from rankcodes.field import make_field

BACKENDS = {"pure": _kernels_py}
try:
    from rankcodes import _kernels_c

    BACKENDS["cython"] = _kernels_c
except ImportError:
    pass


def _workloads(quick):
    f8 = make_field(2, 3)
    f16 = make_field(2, 4)
    cube = cartesian_power(
        make_gabidulin(f8, default_generator_vector(f8, 2), 1), 2 if quick else 3
    )
    gab44 = make_gabidulin(f16, default_generator_vector(f16, 4), 3 if quick else 4)
    n_cube = cube.n
    words_cube = _kernels_py.enumerate_codewords(
        2, 3, n_cube, cube.k, _contrib_table(cube)
    )
    table_cube = _kernels_py.rank_table(2, 3, n_cube)
    rng = np.random.default_rng(11)
    idxs = rng.integers(0, 2**16, 2**14 if quick else 2**16).astype(np.int64)

    return [
        (
            f"rank_table 2^{3 * n_cube} entries (q=2, m=3, n={n_cube})",
            lambda b: b.rank_table(2, 3, n_cube),
        ),
        (
            f"vector_ranks {len(idxs)} vectors (q=2, m=4, n=4)",
            lambda b: b.vector_ranks(2, 4, 4, idxs),
        ),
        (
            f"enumerate_codewords {16**gab44.k} words (GF(16), n=4, k={gab44.k})",
            lambda b: b.enumerate_codewords(2, 4, 4, gab44.k, _contrib_table(gab44)),
        ),
        (
            f"covering_sweep {len(table_cube)} x {len(words_cube)} (Gabidulin cube)",
            lambda b: b.covering_sweep(
                2, 3, n_cube, words_cube, table_cube, 0, len(table_cube)
            ),
        ),
        (
            f"maximal_sweep {len(table_cube)} x {len(words_cube)} (threshold 2)",
            lambda b: b.maximal_sweep(
                2, 3, n_cube, words_cube, table_cube, 2, 0, len(table_cube)
            ),
        ),
    ]


def _time(fn, backend):
    best = float("inf")
    result = None
    for _ in range(3):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if "cython" not in BACKENDS:
        print("compiled backend not built; timing the pure backend only")

    width = 62
    print(f"{'workload':<{width}} " + " ".join(f"{k:>10}" for k in BACKENDS))
    for name, fn in _workloads(args.quick):
        times = {}
        results = {}
        for key, backend in BACKENDS.items():
            times[key], results[key] = _time(fn, backend)
        values = list(results.values())
        for other in values[1:]:
            if isinstance(values[0], np.ndarray):
                assert np.array_equal(values[0], other)
            else:
                assert values[0] == other
        row = " ".join(f"{times[k] * 1e3:>9.1f}ms" for k in BACKENDS)
        print(f"{name:<{width}} {row}")
    if "cython" in BACKENDS:
        print("\n(equal results asserted; times are best of 3)")


if __name__ == "__main__":
    main()
