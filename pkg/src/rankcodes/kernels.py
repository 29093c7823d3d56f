"""Kernel dispatch: compiled Cython backend when available, NumPy fallback.

Set RANKCODES_PURE=1 to force the fallback (used by the benchmark and the
backend-equivalence tests).  Both backends implement identical contracts,
so every result is bit-for-bit independent of the choice.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("RANKCODES_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels_c as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

# Largest rank table we are willing to materialize (uint8 entries).
MAX_TABLE = 1 << 28

_table_cache: dict[tuple[int, int, int], np.ndarray] = {}
_CACHE_BYTES = 1 << 28


def backend_name() -> str:
    return BACKEND


def fits_kernel(q: int, m: int, n: int) -> bool:
    """True when vector indices over GF(q^m)^n fit the int64 kernel encoding."""
    return m <= 60 and (q**m) ** n < (1 << 62)


def _require_fits(q: int, m: int, n: int):
    if not fits_kernel(q, m, n):
        raise ValueError(
            f"index space (q^m)^n for q={q} m={m} n={n} exceeds int64; "
            "callers must use the exact object path"
        )


def rank_table(q: int, m: int, n: int) -> np.ndarray:
    """Memoized table of rank weights for all (q^m)^n vector indices."""
    _require_fits(q, m, n)
    key = (q, m, n)
    hit = _table_cache.get(key)
    if hit is not None:
        return hit
    size = (q**m) ** n
    if size > MAX_TABLE:
        raise ValueError(f"rank table of size {size} exceeds the {MAX_TABLE} cap")
    # The subspace-automaton construction beats per-index elimination even
    # compiled; use it whenever its state space is small (q = 2, m <= 7).
    if q == 2 and m <= 7:
        table = _kernels_py.rank_table(q, m, n)
    else:
        table = _impl.rank_table(q, m, n)
    while _table_cache and sum(t.nbytes for t in _table_cache.values()) + size > _CACHE_BYTES:
        _table_cache.pop(next(iter(_table_cache)))
    _table_cache[key] = table
    return table


def vector_ranks(q: int, m: int, n: int, idxs: np.ndarray) -> np.ndarray:
    _require_fits(q, m, n)
    return _impl.vector_ranks(q, m, n, np.ascontiguousarray(idxs, np.int64))


def enumerate_codewords(q: int, m: int, n: int, k: int, contrib: np.ndarray) -> np.ndarray:
    _require_fits(q, m, n)
    return _impl.enumerate_codewords(
        q, m, n, k, np.ascontiguousarray(contrib, np.int64)
    )


def covering_sweep(q, m, n, words, table, start, stop):
    return _impl.covering_sweep(
        q, m, n, np.ascontiguousarray(words, np.int64), table, int(start), int(stop)
    )


def maximal_sweep(q, m, n, words, table, threshold, start, stop):
    return _impl.maximal_sweep(
        q,
        m,
        n,
        np.ascontiguousarray(words, np.int64),
        table,
        int(threshold),
        int(start),
        int(stop),
    )


def min_dists(q, m, n, xs, words, table):
    return _impl.min_dists(
        q,
        m,
        n,
        np.ascontiguousarray(xs, np.int64),
        np.ascontiguousarray(words, np.int64),
        table,
    )


def sub_from(q: int, m: int, n: int, x: int, ys: np.ndarray) -> np.ndarray:
    """Encoded x - ys[i], digit-wise mod q (backend-independent NumPy math)."""
    ys = np.ascontiguousarray(ys, np.int64)
    if q == 2:
        return np.bitwise_xor(ys, np.int64(x))
    out = np.zeros_like(ys)
    w = ys.copy()
    xx = int(x)
    base = 1
    for _ in range(m * n):
        dy = w % q
        w //= q
        dx = xx % q
        xx //= q
        out += ((dx - dy) % q) * base
        base *= q
    return out


def hamming_weights(q: int, m: int, n: int, idxs: np.ndarray) -> np.ndarray:
    """Hamming weight (nonzero entries) of each encoded vector."""
    Q = q**m
    rem = np.ascontiguousarray(idxs, np.int64).copy()
    out = np.zeros(len(rem), np.uint8)
    for _ in range(n):
        out += (rem % Q != 0)
        rem //= Q
    return out
