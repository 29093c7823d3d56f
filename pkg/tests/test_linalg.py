import itertools
import random

import numpy as np
import pytest

from rankcodes.errors import FieldMismatch, LengthMismatch
from rankcodes.field import make_field
from rankcodes.linalg import (
    RankVector,
    expand,
    hamming_weight,
    rank_distance,
    rank_gfq,
    rank_weight,
    transpose_vector,
)


def vec(field, *codes):
    return RankVector.from_ints(field, codes)


def all_vectors(field, n):
    for codes in itertools.product(range(field.order), repeat=n):
        yield RankVector.from_ints(field, codes)


def test_expand_examples(gf4):
    assert expand(vec(gf4, 0, 0)).data == ((0, 0), (0, 0))
    assert expand(vec(gf4, 1, 2)).data == ((1, 0), (0, 1))
    assert expand(vec(gf4, 2, 2)).data == ((0, 0), (1, 1))


def test_rank_gfq_examples(gf4):
    assert rank_gfq(expand(vec(gf4, 0, 0))) == 0
    assert rank_gfq(expand(vec(gf4, 1, 2))) == 2
    assert rank_gfq(expand(vec(gf4, 2, 2))) == 1


def test_rank_weight_examples(gf4):
    assert rank_weight(vec(gf4, 0, 0, 0)) == 0
    assert rank_weight(vec(gf4, 1, 2)) == 2
    # (1, 1, a+1) expands to columns (1,0), (1,0), (1,1)
    assert rank_weight(vec(gf4, 1, 1, 3)) == 2


def test_rank_distance_examples(gf4):
    a = vec(gf4, 1, 2)
    assert rank_distance(a, a) == 0
    assert rank_distance(a, vec(gf4, 0, 0)) == 2
    assert rank_distance(vec(gf4, 2, 2), vec(gf4, 1, 1)) == 1


def test_rank_distance_errors(gf4, gf8):
    with pytest.raises(LengthMismatch):
        rank_distance(vec(gf4, 1, 2), vec(gf4, 1, 2, 3))
    with pytest.raises(FieldMismatch):
        rank_distance(vec(gf4, 1, 2), vec(gf8, 1, 2))


def test_hamming_weight_examples(gf4):
    assert hamming_weight(vec(gf4, 0, 0)) == 0
    assert hamming_weight(vec(gf4, 1, 2)) == 2
    assert hamming_weight(vec(gf4, 0, 2, 0)) == 1


@pytest.mark.parametrize("q,m,n", [(2, 2, 2), (2, 3, 2)])
def test_metric_axioms_exhaustive(q, m, n):
    field = make_field(q, m)
    vecs = list(all_vectors(field, n))
    size = len(vecs)
    dist = np.empty((size, size), np.int32)
    for i, a in enumerate(vecs):
        for j, b in enumerate(vecs):
            dist[i, j] = rank_distance(a, b)
    assert np.array_equal(dist == 0, np.eye(size, dtype=bool))  # identity
    assert np.array_equal(dist, dist.T)  # symmetry
    # triangle inequality over all triples, vectorized over the middle point
    assert (dist[:, None, :] <= dist[:, :, None] + dist[None, :, :]).all()


def test_rank_bounded_by_dims_and_hamming(gf4):
    for v in all_vectors(gf4, 3):
        r = rank_weight(v)
        assert r <= min(3, gf4.m)
        assert r <= hamming_weight(v)


def test_transpose_examples(gf4):
    zero = vec(gf4, 0, 0)
    assert transpose_vector(zero, gf4).to_ints() == (0, 0)
    assert transpose_vector(vec(gf4, 1, 2), gf4).to_ints() == (1, 2)
    assert transpose_vector(vec(gf4, 2, 2), gf4).to_ints() == (0, 3)


def test_transpose_errors(gf4, gf8):
    with pytest.raises(FieldMismatch):
        transpose_vector(vec(gf4, 1, 2), gf8)  # degree 3 != length 2
    with pytest.raises(FieldMismatch):
        transpose_vector(vec(gf4, 1, 2), make_field(3, 2))  # wrong prime


@pytest.mark.parametrize(
    "q,m,n", [(2, 2, 3), (2, 3, 2)]
)
def test_transpose_preserves_rank_exhaustive(q, m, n):
    field = make_field(q, m)
    target = make_field(q, n)
    for v in all_vectors(field, n):
        t = transpose_vector(v, target)
        assert len(t) == m
        assert rank_weight(t) == rank_weight(v)
        # round trip through the transpose of the transpose
        assert transpose_vector(t, field).to_ints() == v.to_ints()


def _poly_eval(coeffs, x):
    field = x.field
    acc = field.zero()
    for c in reversed(coeffs):
        acc = acc * x + field.element((c,))
    return acc


def test_rank_is_basis_independent():
    f1 = make_field(2, 4)  # x^4 + x^3 + 1
    f2 = make_field(2, 4, [1, 1, 0, 0, 1])  # x^4 + x + 1
    root = next(e for e in f2.elements() if not _poly_eval(f1.modulus, e))
    iso = {
        a.to_int(): sum(
            (root**t for t, c in enumerate(a.coeffs) if c), f2.zero()
        )
        for a in f1.elements()
    }
    # sanity: the map is a field isomorphism
    for x, y in [(3, 7), (9, 12), (5, 5)]:
        a, b = f1.from_int(x), f1.from_int(y)
        assert iso[(a * b).to_int()] == iso[x] * iso[y]
        assert iso[(a + b).to_int()] == iso[x] + iso[y]
    rng = random.Random(1789)
    for _ in range(1000):
        codes = [rng.randrange(16) for _ in range(3)]
        v1 = RankVector.from_ints(f1, codes)
        v2 = RankVector(f2, tuple(iso[c] for c in codes))
        assert rank_weight(v1) == rank_weight(v2)


def test_vector_index_roundtrip_and_lex_order(gf8):
    for idx in range(0, 512, 7):
        v = RankVector.from_index(gf8, 3, idx)
        assert v.to_index() == idx
    # numeric index order is lexicographic order on coordinate tuples
    pairs = [(RankVector.from_index(gf8, 2, i).to_ints(), i) for i in range(64)]
    assert sorted(pairs) == pairs


def test_vectors_longer_than_m(gf4):
    # n > m is fully supported; rank caps at m
    v = vec(gf4, 1, 2, 3, 1, 2)
    assert rank_weight(v) == 2
    assert hamming_weight(v) == 5


def test_row_echelon_is_deterministic_and_reduced(gf4):
    from rankcodes.linalg import row_echelon

    mat = expand(vec(gf4, 3, 1, 2))
    ech = row_echelon(mat)
    assert ech == row_echelon(mat)  # reproducible intermediate
    # echelon shape: each pivot sits right of the previous one, scaled to 1
    pivots = [next((j for j, x in enumerate(row) if x), None) for row in ech.data]
    real = [p for p in pivots if p is not None]
    assert real == sorted(real)
    for row, p in zip(ech.data, pivots):
        if p is not None:
            assert row[p] == 1
