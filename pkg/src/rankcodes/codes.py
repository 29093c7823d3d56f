"""Linear rank-metric codes: Gabidulin, generalized Gabidulin, cartesian powers.

A code is its k x n generator matrix over GF(q^m) plus construction
provenance.  Minimum distances are measured by exhaustive codeword
enumeration (the only exact method available at these scales), guarded by
an explicit budget so blow-ups are deliberate rather than accidental.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import kernels
from .bounds import singleton_dmax
from .errors import (
    BadDimension,
    BadFrobeniusStep,
    DependentGenerators,
    FieldMismatch,
    LengthExceedsM,
    LengthMismatch,
    ResourceLimit,
)
from .field import ExtensionField, FieldElement, make_field
from .linalg import RankVector, hamming_weight, rank_weight

DEFAULT_ANALYZE_BUDGET = 1 << 22


class _EchelonExt:
    """Incremental row echelon basis over GF(q^m), for rank and membership."""

    def __init__(self):
        self.rows: list[tuple[int, list[FieldElement]]] = []

    def reduce(self, row) -> list[FieldElement]:
        row = list(row)
        for lead, base in self.rows:
            c = row[lead]
            if c:
                row = [x - c * y for x, y in zip(row, base)]
        return row

    def add(self, row) -> bool:
        """Reduce and insert; returns False when row was already in the span."""
        red = self.reduce(row)
        lead = next((j for j, x in enumerate(red) if x), -1)
        if lead < 0:
            return False
        inv = red[lead].inverse()
        self.rows.append((lead, [x * inv for x in red]))
        return True

    def contains(self, row) -> bool:
        return not any(self.reduce(row))


@dataclass(frozen=True)
class LinearCode:
    """An (n, k) linear code over GF(q^m) given by a full-row-rank generator."""

    field: ExtensionField
    n: int
    k: int
    generator: tuple[tuple[FieldElement, ...], ...]
    provenance: tuple

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise BadDimension(f"need 1 <= k <= n, got k={self.k} n={self.n}")
        if len(self.generator) != self.k or any(
            len(row) != self.n for row in self.generator
        ):
            raise LengthMismatch("generator must be a k x n matrix")
        for row in self.generator:
            for e in row:
                if e.field != self.field:
                    raise FieldMismatch("generator entry from a different field")
        ech = _EchelonExt()
        for row in self.generator:
            if not ech.add(row):
                raise DependentGenerators("generator rows are linearly dependent")

    @property
    def size(self) -> int:
        """Number of codewords q^(mk)."""
        return self.field.order**self.k

    def row(self, i: int) -> RankVector:
        return RankVector(self.field, self.generator[i])

    def __repr__(self):
        kind = self.provenance[0]
        return f"<({self.n},{self.k}) {kind} code over {self.field!r}>"


@dataclass(frozen=True)
class CodeAnalysis:
    """Exhaustively measured distances and the MRD verdict."""

    d_rank: int
    d_hamming: int
    singleton_dmax: int
    is_mrd: bool
    min_weight_codeword: RankVector


def make_code(field: ExtensionField, rows, provenance=("explicit",)) -> LinearCode:
    """Code from explicit generator rows of FieldElements."""
    gen = tuple(tuple(row) for row in rows)
    if not gen:
        raise BadDimension("generator needs at least one row")
    return LinearCode(field, len(gen[0]), len(gen), gen, provenance)


def default_generator_vector(field: ExtensionField, n: int) -> tuple[FieldElement, ...]:
    """The basis elements 1, x, ..., x^(n-1): always GF(q)-independent."""
    if n > field.m:
        raise LengthExceedsM(f"need n <= m, got n={n} m={field.m}")
    return field.basis[:n]


def make_gabidulin(
    field: ExtensionField, g, k: int, a: int = 1
) -> LinearCode:
    """Gabidulin code: row i is the (q^a)^i Frobenius image of g, entrywise.

    a = 1 gives the classical construction; any a with gcd(a, m) = 1 gives
    a generalized Gabidulin code.  Entries of g must be linearly
    independent over GF(q), which forces n <= m.
    """
    g = tuple(g)
    n = len(g)
    if n > field.m:
        raise LengthExceedsM(f"generator vector of length {n} needs n <= m = {field.m}")
    if not 1 <= k <= n:
        raise BadDimension(f"need 1 <= k <= n, got k={k} n={n}")
    if a < 1 or gcd(a, field.m) != 1:
        raise BadFrobeniusStep(f"need a >= 1 with gcd(a, m) = 1, got a={a} m={field.m}")
    for e in g:
        if e.field != field:
            raise FieldMismatch("generator entry from a different field")
    if rank_weight(RankVector(field, g)) != n:
        raise DependentGenerators("entries of g are dependent over GF(q)")
    rows = tuple(tuple(e.frobenius(i, a) for e in g) for i in range(k))
    return LinearCode(field, n, k, rows, ("gabidulin", g, a))


def cartesian_power(code: LinearCode, l: int) -> LinearCode:
    """l-fold cartesian product with block-diagonal generator (nl, kl)."""
    if l < 1:
        raise BadDimension(f"need l >= 1, got {l}")
    if l == 1:
        return code
    zero = code.field.zero()
    n, k = code.n, code.k
    rows = []
    for block in range(l):
        for row in code.generator:
            rows.append(
                (zero,) * (n * block) + row + (zero,) * (n * (l - 1 - block))
            )
    return LinearCode(code.field, n * l, k * l, tuple(rows), ("cartesian", code, l))


def encode(code: LinearCode, message) -> RankVector:
    """message x generator."""
    message = tuple(message)
    if len(message) != code.k:
        raise LengthMismatch(f"message length {len(message)} != k = {code.k}")
    for e in message:
        if e.field != code.field:
            raise FieldMismatch("message entry from a different field")
    zero = code.field.zero()
    out = [zero] * code.n
    for s, row in zip(message, code.generator):
        if s:
            out = [acc + s * e for acc, e in zip(out, row)]
    return RankVector(code.field, tuple(out))


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------


def _contrib_table(code: LinearCode) -> np.ndarray:
    """Per message-digit encoded contributions for the enumeration kernel.

    Base-q digit b of the message index is coefficient (b mod m) of message
    element k-1-(b div m); its value-v contribution is the encoded vector
    v * gamma_t * row_j.
    """
    field = code.field
    q, m, k = field.q, field.m, code.k
    contrib = np.zeros((m * k, q), np.int64)
    zero_row = (field.zero(),) * code.n
    for j in range(k):
        for t in range(m):
            gamma = field.from_int(q**t)
            base = tuple(gamma * e for e in code.generator[j])
            b = m * (k - 1 - j) + t
            acc = zero_row
            for v in range(1, q):
                acc = tuple(x + y for x, y in zip(acc, base))
                contrib[b, v] = RankVector(field, acc).to_index()
    return contrib


def encoded_codewords(code: LinearCode) -> np.ndarray:
    """All codeword indices in lexicographic message order (int64 path)."""
    field = code.field
    return kernels.enumerate_codewords(
        field.q, field.m, code.n, code.k, _contrib_table(code)
    )


def iter_codewords(code: LinearCode):
    """Yield codewords as RankVectors, in lexicographic message order.

    Exact object path with no index-size limit; used when q^(mn) does not
    fit the int64 kernels.
    """
    field = code.field
    for codes_tuple in itertools.product(range(field.order), repeat=code.k):
        message = [field.from_int(c) for c in codes_tuple]
        yield encode(code, message)


def analyze(code: LinearCode, budget: int = DEFAULT_ANALYZE_BUDGET) -> CodeAnalysis:
    """Exhaustive minimum rank/Hamming distances and MRD classification.

    Linearity reduces minimum distance to minimum nonzero weight, so the
    q^(mk) codewords are enumerated once.  The reported witness is the
    lexicographically smallest codeword of minimum rank weight.
    """
    count = code.size
    if count > budget:
        raise ResourceLimit(count, budget)
    field = code.field
    if kernels.fits_kernel(field.q, field.m, code.n):
        words = encoded_codewords(code)
        ranks = kernels.vector_ranks(field.q, field.m, code.n, words)
        hams = kernels.hamming_weights(field.q, field.m, code.n, words)
        nz = words != 0
        d_rank = int(ranks[nz].min())
        d_ham = int(hams[nz].min())
        witness_idx = int(words[nz & (ranks == d_rank)].min())
        witness = RankVector.from_index(field, code.n, witness_idx)
    else:
        d_rank, d_ham, witness = None, None, None
        for w in iter_codewords(code):
            r = rank_weight(w)
            if r == 0:
                continue
            h = hamming_weight(w)
            if d_ham is None or h < d_ham:
                d_ham = h
            if d_rank is None or r < d_rank:
                d_rank, witness = r, w
            elif r == d_rank and w.to_ints() < witness.to_ints():
                witness = w
    dmax = singleton_dmax(field.q, field.m, code.n, code.k)
    return CodeAnalysis(
        d_rank=d_rank,
        d_hamming=d_ham,
        singleton_dmax=dmax,
        is_mrd=d_rank == dmax,
        min_weight_codeword=witness,
    )


# ---------------------------------------------------------------------------
# plain-text serialization
# ---------------------------------------------------------------------------


def dump_code(code: LinearCode) -> str:
    """Serialize: 'q m n k' header, modulus coefficients, k rows of element codes."""
    field = code.field
    lines = [
        f"{field.q} {field.m} {code.n} {code.k}",
        ",".join(str(c) for c in field.modulus),
    ]
    for row in code.generator:
        lines.append(",".join(str(e.to_int()) for e in row))
    return "\n".join(lines) + "\n"


def load_code(text: str) -> LinearCode:
    """Parse the dump_code format; the result carries explicit provenance."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) < 3:
        raise ValueError("code file needs a header, a modulus, and generator rows")
    q, m, n, k = (int(x) for x in lines[0].split())
    modulus = [int(c) for c in lines[1].split(",")]
    field = make_field(q, m, modulus)
    if len(lines) != 2 + k:
        raise ValueError(f"expected {k} generator rows, got {len(lines) - 2}")
    rows = []
    for ln in lines[2:]:
        codes_row = [int(c) for c in ln.split(",")]
        if len(codes_row) != n:
            raise LengthMismatch(f"generator row has {len(codes_row)} entries, not {n}")
        rows.append(tuple(field.from_int(c) for c in codes_row))
    return make_code(field, rows)
