"""Backend equivalence and cross-validation of the enumeration kernels.

Every kernel is checked against the exact object-level implementations in
``linalg``/``codes``, and the compiled backend (when built) must agree
bit-for-bit with the pure one, witnesses included.
"""

import itertools

import numpy as np
import pytest

from rankcodes import _kernels_py
from rankcodes import kernels as facade
from rankcodes.codes import (
    _contrib_table,
    cartesian_power,
    default_generator_vector,
    encode,
    make_gabidulin,
)
from rankcodes.field import make_field
from rankcodes.linalg import RankVector, hamming_weight, rank_weight

BACKENDS = [_kernels_py]
try:
    from rankcodes import _kernels_c

    BACKENDS.append(_kernels_c)
except ImportError:
    pass


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit("_", 1)[-1])
def backend(request):
    return request.param


SMALL_SPACES = [(2, 2, 2), (2, 3, 2), (2, 2, 3), (3, 2, 2), (5, 1, 3), (2, 4, 2)]


@pytest.mark.parametrize("q,m,n", SMALL_SPACES)
def test_rank_table_matches_linalg(backend, q, m, n):
    field = make_field(q, m)
    table = backend.rank_table(q, m, n)
    assert len(table) == field.order**n
    for idx in range(len(table)):
        assert table[idx] == rank_weight(RankVector.from_index(field, n, idx))


@pytest.mark.parametrize("q,m,n", SMALL_SPACES)
def test_vector_ranks_matches_table(backend, q, m, n):
    size = (q**m) ** n
    rng = np.random.default_rng(42)
    idxs = rng.integers(0, size, 300).astype(np.int64)
    table = backend.rank_table(q, m, n)
    assert np.array_equal(backend.vector_ranks(q, m, n, idxs), table[idxs])


@pytest.mark.parametrize(
    "q,m,n,k", [(2, 3, 2, 1), (2, 3, 3, 2), (3, 2, 2, 2), (2, 4, 4, 2)]
)
def test_enumerate_codewords_matches_encode(backend, q, m, n, k):
    field = make_field(q, m)
    code = make_gabidulin(field, default_generator_vector(field, n), k)
    words = backend.enumerate_codewords(q, m, n, k, _contrib_table(code))
    assert len(words) == field.order**k
    for i, msg_codes in enumerate(itertools.product(range(field.order), repeat=k)):
        msg = [field.from_int(c) for c in msg_codes]
        assert int(words[i]) == encode(code, msg).to_index()


def test_hamming_weights_matches_linalg():
    field = make_field(3, 2)
    idxs = np.arange(81, dtype=np.int64)
    hams = facade.hamming_weights(3, 2, 2, idxs)
    for idx in idxs:
        v = RankVector.from_index(field, 2, int(idx))
        assert hams[idx] == hamming_weight(v)


def test_sub_from_matches_field_ops():
    field = make_field(3, 2)
    ys = np.arange(81, dtype=np.int64)
    x = 47
    diffs = facade.sub_from(3, 2, 2, x, ys)
    xv = RankVector.from_index(field, 2, x)
    for y in ys:
        yv = RankVector.from_index(field, 2, int(y))
        assert int(diffs[y]) == (xv - yv).to_index()


def _sweep_fixture(q_case):
    if q_case == 2:
        field = make_field(2, 3)
        code = cartesian_power(
            make_gabidulin(field, default_generator_vector(field, 2), 1), 2
        )
    else:
        field = make_field(3, 2)
        code = make_gabidulin(field, default_generator_vector(field, 2), 1)
    q, m, n = field.q, field.m, code.n
    words = _kernels_py.enumerate_codewords(q, m, n, code.k, _contrib_table(code))
    table = _kernels_py.rank_table(q, m, n)
    return q, m, n, words, table


@pytest.mark.parametrize("q_case", [2, 3])
def test_sweeps_agree_across_backends(q_case):
    q, m, n, words, table = _sweep_fixture(q_case)
    space = len(table)
    expected_cover = None
    expected_max = None
    expected_dists = None
    for b in BACKENDS:
        cover = b.covering_sweep(q, m, n, words, table, 0, space)
        far = b.maximal_sweep(q, m, n, words, table, 2, 0, space)
        dists = b.min_dists(q, m, n, words[:40], words, table)
        if expected_cover is None:
            expected_cover, expected_max, expected_dists = cover, far, dists
        else:
            assert cover == expected_cover
            assert far == expected_max
            assert np.array_equal(dists, expected_dists)


@pytest.mark.parametrize("q_case", [2, 3])
def test_covering_sweep_reference_semantics(backend, q_case):
    # brute-force reference: max of min-distance, first witness, in index order
    q, m, n, words, table = _sweep_fixture(q_case)
    space = len(table)
    mins = [min(int(table[f(x, c)]) for c in words) for x, f in _diffs(q, m, n, space)]
    best = max(mins)
    wit = mins.index(best)
    assert backend.covering_sweep(q, m, n, words, table, 0, space) == (best, wit)
    # chunked runs reduce to the same answer regardless of the cut points
    for edges in ([0, 17, space], [0, space // 3, space // 2, space]):
        cbest, cwit = -1, -1
        for lo, hi in zip(edges, edges[1:]):
            b, w = backend.covering_sweep(q, m, n, words, table, lo, hi)
            if b > cbest:
                cbest, cwit = b, w
        assert (cbest, cwit) == (best, wit)


def _diffs(q, m, n, space):
    if q == 2:
        return ((x, lambda x, c: x ^ int(c)) for x in range(space))

    def sub(x, c):
        return int(facade.sub_from(q, m, n, x, np.array([c], np.int64))[0])

    return ((x, sub) for x in range(space))


def test_maximal_sweep_finds_first_far_vector(backend):
    # (3, 1) repetition over GF(4): radius 2, so distance-2 holes exist
    from rankcodes.codes import make_code

    field = make_field(2, 2)
    rep = make_code(field, [(field.one(),) * 3])
    words = _kernels_py.enumerate_codewords(2, 2, 3, 1, _contrib_table(rep))
    table = _kernels_py.rank_table(2, 2, 3)
    space = len(table)
    word_set = set(int(w) for w in words)
    first_far = next(
        x
        for x in range(space)
        if x not in word_set and min(int(table[x ^ int(c)]) for c in words) >= 2
    )
    assert backend.maximal_sweep(2, 2, 3, words, table, 2, 0, space) == first_far
    # nothing sits at rank distance >= 3 from every codeword (radius is 2)
    assert backend.maximal_sweep(2, 2, 3, words, table, 3, 0, space) == -1
    # the l = 2 cartesian square of the GF(8) code is maximal: no hit
    q, m, n, cw, ct = _sweep_fixture(2)
    assert backend.maximal_sweep(q, m, n, cw, ct, 2, 0, len(ct)) == -1


def test_facade_rank_table_cache():
    t1 = facade.rank_table(2, 2, 2)
    t2 = facade.rank_table(2, 2, 2)
    assert t1 is t2
    assert facade.backend_name() in ("cython", "pure")
