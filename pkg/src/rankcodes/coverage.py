"""Covering radius, maximality, translate weights, and weight distributions.

Maximality is decided through the covering-radius equivalence: a code can
be enlarged without lowering its minimum distance iff some ambient vector
sits at rank distance >= d from every codeword, so the verdict covers
nonlinear supercodes for free.  Ambient sweeps run in lexicographic index
order; parallel partitions reduce deterministically, so witnesses are
identical for every worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .codes import (
    DEFAULT_ANALYZE_BUDGET,
    LinearCode,
    _EchelonExt,
    analyze,
    encoded_codewords,
    iter_codewords,
)
from .errors import FieldMismatch, LengthMismatch, NotNested, NotStrict, ResourceLimit
from .linalg import RankVector, rank_weight

DEFAULT_SWEEP_BUDGET = 1 << 26

# Fixed partition grain: results must not depend on the worker count, so
# chunk boundaries are a function of the space alone.
_CHUNK = 1 << 16


@dataclass(frozen=True)
class CoverageReport:
    """Covering radius with its witness and the maximality verdict.

    radius_bound_maximal is the maximal-code cap min(n-k, floor(m(n-k)/n)),
    present only when the code is maximal (it does not bind otherwise).
    """

    radius: int
    deep_hole: RankVector
    is_maximal: bool
    radius_bound_maximal: int | None


@dataclass(frozen=True)
class TranslateWeights:
    """Least/greatest nonzero rank weights of translate-leaders of C1 by C2."""

    little_m: int
    big_m: int


def _sweep_inputs(code: LinearCode, budget: int):
    field = code.field
    space = field.order**code.n
    cap = min(budget, kernels.MAX_TABLE)
    if space > cap:
        raise ResourceLimit(space, cap)
    words = encoded_codewords(code)
    table = kernels.rank_table(field.q, field.m, code.n)
    return space, words, table


def covering_radius(
    code: LinearCode, budget: int = DEFAULT_SWEEP_BUDGET, workers: int = 1
) -> CoverageReport:
    """Exhaustive covering radius: max over ambient x of min dist to the code.

    The deep hole is the lexicographically smallest maximizer, for any
    worker count.
    """
    field = code.field
    space, words, table = _sweep_inputs(code, budget)
    args = (field.q, field.m, code.n, words, table)
    if workers <= 1:
        best, wit = kernels.covering_sweep(*args, 0, space)
    else:
        chunks = [(s, min(s + _CHUNK, space)) for s in range(0, space, _CHUNK)]
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(lambda c: kernels.covering_sweep(*args, *c), chunks))
        best, wit = -1, -1
        for b, w in results:
            if b > best:
                best, wit = b, w
    ana = analyze(code, budget=budget)
    maximal = best <= ana.d_rank - 1
    return CoverageReport(
        radius=best,
        deep_hole=RankVector.from_index(field, code.n, wit),
        is_maximal=maximal,
        radius_bound_maximal=maximal_radius_bound(code) if maximal else None,
    )


def find_extension_vector(
    code: LinearCode, budget: int = DEFAULT_SWEEP_BUDGET, workers: int = 1
) -> RankVector | None:
    """First ambient vector at rank distance >= d_rank from every codeword.

    Such a vector extends the code without lowering its minimum distance;
    None means the code is maximal.  Early-exits on the first hit.
    """
    field = code.field
    ana = analyze(code, budget=budget)
    space, words, table = _sweep_inputs(code, budget)
    args = (field.q, field.m, code.n, words, table, ana.d_rank)
    if workers <= 1:
        wit = kernels.maximal_sweep(*args, 0, space)
    else:
        chunks = [(s, min(s + _CHUNK, space)) for s in range(0, space, _CHUNK)]
        wit = -1
        with ThreadPoolExecutor(max_workers=workers) as ex:
            for i in range(0, len(chunks), workers):
                wave = chunks[i : i + workers]
                for res in ex.map(lambda c: kernels.maximal_sweep(*args, *c), wave):
                    if res >= 0:
                        wit = res
                        break
                if wit >= 0:
                    break
    return None if wit < 0 else RankVector.from_index(field, code.n, wit)


def is_maximal(
    code: LinearCode, budget: int = DEFAULT_SWEEP_BUDGET, workers: int = 1
) -> bool:
    """True iff no vector extends the code at its own minimum distance."""
    return find_extension_vector(code, budget, workers) is None


def maximal_radius_bound(code: LinearCode) -> int:
    """min(n - k, floor((m/n)(n - k))): covering-radius cap for maximal codes."""
    m, n, k = code.field.m, code.n, code.k
    return min(n - k, (m * (n - k)) // n)


def translate_weights(
    c2: LinearCode, c1: LinearCode, budget: int = DEFAULT_ANALYZE_BUDGET
) -> TranslateWeights:
    """m(C2, C1) and M(C2, C1) over the translates of C1 by elements of C2.

    little_m is the least nonzero coset-leader weight, big_m the greatest;
    both feed the supercode chain r(C1) >= M >= m >= d(C2).
    """
    if c1.field != c2.field:
        raise FieldMismatch("sub- and supercode live in different fields")
    if c1.n != c2.n:
        raise LengthMismatch(f"lengths differ: {c1.n} vs {c2.n}")
    ech = _EchelonExt()
    for row in c2.generator:
        ech.add(row)
    for row in c1.generator:
        if not ech.contains(row):
            raise NotNested("subcode generator row outside the supercode row space")
    if c1.k >= c2.k:
        raise NotStrict("nested codes coincide; strict inclusion required")
    if c2.size > budget:
        raise ResourceLimit(c2.size, budget)
    field = c1.field
    q, m, n = field.q, field.m, c2.n
    if kernels.fits_kernel(q, m, n):
        w1 = encoded_codewords(c1)
        w2 = encoded_codewords(c2)
        space = field.order**n
        if space <= min(kernels.MAX_TABLE, 1 << 22):
            table = kernels.rank_table(q, m, n)
            mins = kernels.min_dists(q, m, n, w2, w1, table)
        else:
            mins = np.empty(len(w2), np.uint8)
            for i, x in enumerate(w2):
                diffs = kernels.sub_from(q, m, n, int(x), w1)
                mins[i] = kernels.vector_ranks(q, m, n, diffs).min()
    else:
        words1 = list(iter_codewords(c1))
        mins = np.array(
            [
                min(rank_weight(x - c) for c in words1)
                for x in iter_codewords(c2)
            ],
            dtype=np.int64,
        )
    return TranslateWeights(
        little_m=int(mins[mins > 0].min()), big_m=int(mins.max())
    )


def weight_distribution(
    code: LinearCode, budget: int = DEFAULT_ANALYZE_BUDGET
) -> list[int]:
    """Codeword counts by rank weight 0..min(n, m); sums to q^(mk)."""
    if code.size > budget:
        raise ResourceLimit(code.size, budget)
    field = code.field
    top = min(code.n, field.m)
    if kernels.fits_kernel(field.q, field.m, code.n):
        words = encoded_codewords(code)
        ranks = kernels.vector_ranks(field.q, field.m, code.n, words)
        hist = np.bincount(ranks, minlength=top + 1)
    else:
        hist = [0] * (top + 1)
        for w in iter_codewords(code):
            hist[rank_weight(w)] += 1
    return [int(x) for x in hist]
