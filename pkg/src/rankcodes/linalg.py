"""Vectors over GF(q^m), their GF(q) matrix expansion, and rank weights.

A length-n vector expands column-by-column into an m x n matrix over the
prime field; its rank weight is the GF(q) rank of that matrix.  The rank
distance d(a, b) = rank_weight(a - b) is a metric on GF(q^m)^n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, LengthMismatch
from .field import ExtensionField, FieldElement


@dataclass(frozen=True)
class RankVector:
    """A vector over GF(q^m) with all entries in the same field."""

    field: ExtensionField
    entries: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise LengthMismatch("vectors must have length >= 1")
        for e in self.entries:
            if e.field != self.field:
                raise FieldMismatch(f"entry from {e.field}, vector over {self.field}")

    @classmethod
    def from_ints(cls, field: ExtensionField, codes) -> RankVector:
        return cls(field, tuple(field.from_int(c) for c in codes))

    @classmethod
    def from_index(cls, field: ExtensionField, n: int, index: int) -> RankVector:
        """Decode the big-endian base-q^m vector index (entry 0 most significant)."""
        order = field.order
        codes = []
        for _ in range(n):
            index, r = divmod(index, order)
            codes.append(r)
        return cls.from_ints(field, reversed(codes))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(e.to_int() for e in self.entries)

    def to_index(self) -> int:
        """Big-endian integer encoding; numeric order == lexicographic order."""
        idx = 0
        for e in self.entries:
            idx = idx * self.field.order + e.to_int()
        return idx

    def _check_pair(self, other: RankVector):
        if self.field != other.field:
            raise FieldMismatch(f"mixed fields {self.field} and {other.field}")
        if len(self.entries) != len(other.entries):
            raise LengthMismatch(
                f"lengths {len(self.entries)} and {len(other.entries)} differ"
            )

    def __add__(self, other: RankVector) -> RankVector:
        self._check_pair(other)
        return RankVector(
            self.field, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: RankVector) -> RankVector:
        self._check_pair(other)
        return RankVector(
            self.field, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def __repr__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class ExpansionMatrix:
    """An m x n matrix over GF(q); data[i][j] is the basis-i coefficient of entry j."""

    q: int
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]


def expand(v: RankVector) -> ExpansionMatrix:
    """Expand v into its m x n coefficient matrix over GF(q)."""
    m = v.field.m
    data = tuple(tuple(e.coeffs[i] for e in v.entries) for i in range(m))
    return ExpansionMatrix(v.field.q, m, len(v.entries), data)


def row_echelon(mat: ExpansionMatrix) -> ExpansionMatrix:
    """Row-echelon form over GF(q).

    Pivots are searched column by column, rows scanned top-down, so the
    intermediate matrices are reproducible across runs.
    """
    q = mat.q
    rows = [list(r) for r in mat.data]
    pivot_row = 0
    for col in range(mat.cols):
        found = -1
        for r in range(pivot_row, mat.rows):
            if rows[r][col]:
                found = r
                break
        if found < 0:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        inv = pow(rows[pivot_row][col], -1, q)
        rows[pivot_row] = [x * inv % q for x in rows[pivot_row]]
        for r in range(pivot_row + 1, mat.rows):
            c = rows[r][col]
            if c:
                rows[r] = [(x - c * y) % q for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == mat.rows:
            break
    return ExpansionMatrix(q, mat.rows, mat.cols, tuple(tuple(r) for r in rows))


def rank_gfq(mat: ExpansionMatrix) -> int:
    """Rank over GF(q) via Gaussian elimination with deterministic pivoting."""
    ech = row_echelon(mat)
    return sum(1 for row in ech.data if any(row))


def rank_weight(v: RankVector) -> int:
    """rank over GF(q) of the expansion of v; 0 <= result <= min(n, m)."""
    return rank_gfq(expand(v))


def rank_distance(a: RankVector, b: RankVector) -> int:
    """Rank weight of a - b."""
    return rank_weight(a - b)


def hamming_weight(v: RankVector) -> int:
    """Number of nonzero entries."""
    return sum(1 for e in v.entries if e)


def transpose_vector(v: RankVector, target: ExtensionField) -> RankVector:
    """Map GF(q^m)^n -> GF(q^n)^m by transposing the expansion matrix.

    ``target`` must be an extension of the same prime field with degree
    equal to len(v); the caller chooses its modulus (any choice preserves
    ranks).
    """
    n = len(v)
    if target.q != v.field.q:
        raise FieldMismatch(
            f"target base field GF({target.q}) != source base field GF({v.field.q})"
        )
    if target.m != n:
        raise FieldMismatch(f"target degree {target.m} != vector length {n}")
    a = expand(v)  # m x n
    # Column i of the n x m transpose is row i of a: a length-n coefficient
    # vector, i.e. one element of the target field GF(q^n).
    entries = tuple(target.element(a.data[i]) for i in range(a.rows))
    return RankVector(target, entries)
