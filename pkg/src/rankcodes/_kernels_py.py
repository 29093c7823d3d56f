"""Pure-Python/NumPy fallback for the enumeration kernels.

Same contracts as the compiled backend in ``_kernels_c``: vectors over
GF(q^m)^n are integer indices (entry 0 most significant, each entry the
base-q encoding of its coefficients), so numeric order on indices is
lexicographic order on vectors.  Hot loops are expressed as NumPy block
operations; results are bit-identical to the compiled backend.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 1 << 18


# ---------------------------------------------------------------------------
# carry-free base-q arithmetic on encoded indices
# ---------------------------------------------------------------------------


def _cf_sub(xs: np.ndarray, c: int, q: int, positions: int) -> np.ndarray:
    """Digit-wise (xs - c) mod q over `positions` base-q digits."""
    if q == 2:
        return np.bitwise_xor(xs, c)
    out = np.zeros_like(xs)
    w = xs.copy()
    base = 1
    for _ in range(positions):
        dw = w % q
        w //= q
        dc = c % q
        c //= q
        out += ((dw - dc) % q) * base
        base *= q
    return out


def _cf_add(xs: np.ndarray, c: int, q: int, positions: int) -> np.ndarray:
    if q == 2:
        return np.bitwise_xor(xs, c)
    out = np.zeros_like(xs)
    w = xs.copy()
    base = 1
    for _ in range(positions):
        dw = w % q
        w //= q
        dc = c % q
        c //= q
        out += ((dw + dc) % q) * base
        base *= q
    return out


# ---------------------------------------------------------------------------
# rank tables and per-vector ranks
# ---------------------------------------------------------------------------


def _reduce2(basis, col):
    for lead, row in basis:
        if col & lead:
            col ^= row
    return col


def _insert2_rref(basis, col):
    """Insert a reduced nonzero column into a canonical (RREF) GF(2) basis."""
    lead = col & -col
    nb = [(lb, (row ^ col) if (row & lead) else row) for lb, row in basis]
    nb.append((lead, col))
    nb.sort(key=lambda t: t[1], reverse=True)
    return tuple(nb)


def _rank_table_q2_dp(m: int, n: int) -> np.ndarray:
    """Rank table over GF(2) via a column-subspace automaton.

    States are canonical bases of the column spans seen so far; appending
    one more column is a table lookup, so the whole q^(mn)-entry table is
    filled with n vectorized gathers.
    """
    Q = 1 << m
    states = [()]
    ids = {(): 0}
    ranks = [0]
    trans = []
    i = 0
    while i < len(states):
        basis = states[i]
        row = np.empty(Q, np.int32)
        for e in range(Q):
            col = _reduce2(basis, e)
            if col == 0:
                row[e] = i
            else:
                nb = _insert2_rref(basis, col)
                j = ids.get(nb)
                if j is None:
                    j = len(states)
                    ids[nb] = j
                    states.append(nb)
                    ranks.append(len(nb))
                row[e] = j
        trans.append(row)
        i += 1
    T = np.vstack(trans)
    if len(states) < 1 << 15:
        T = T.astype(np.int16)
    ranks_of_next = np.asarray(ranks, np.uint8)[T]  # (states, Q)
    labels = np.zeros(1, T.dtype)
    for _ in range(n - 1):
        labels = T[labels].reshape(-1)
    return ranks_of_next[labels].reshape(-1)


def _reduceq(basis, col, q):
    col = list(col)
    for lead, row in basis:
        c = col[lead]
        if c:
            col = [(x - c * y) % q for x, y in zip(col, row)]
    return col


def _rank_table_dfs(q: int, m: int, n: int) -> np.ndarray:
    """Rank table by depth-first sweep over column prefixes (any prime q)."""
    Q = q**m
    size = Q**n
    table = np.empty(size, np.uint8)
    digits = [tuple((e // q**t) % q for t in range(m)) for e in range(Q)]
    inv = [0] + [pow(v, -1, q) for v in range(1, q)]

    def rec(depth, base, basis):
        if depth == n:
            table[base] = len(basis)
            return
        w = Q ** (n - 1 - depth)
        for e in range(Q):
            col = _reduceq(basis, digits[e], q)
            lead = next((t for t, x in enumerate(col) if x), -1)
            if lead < 0:
                rec(depth + 1, base + e * w, basis)
            else:
                ci = inv[col[lead]]
                basis.append((lead, [x * ci % q for x in col]))
                rec(depth + 1, base + e * w, basis)
                basis.pop()

    rec(0, 0, [])
    return table


def rank_table(q: int, m: int, n: int) -> np.ndarray:
    """uint8 array of length (q^m)^n: rank weight of every vector index."""
    if q == 2 and m <= 7:
        return _rank_table_q2_dp(m, n)
    return _rank_table_dfs(q, m, n)


def vector_ranks(q: int, m: int, n: int, idxs: np.ndarray) -> np.ndarray:
    """Rank weight of each encoded vector in idxs."""
    out = np.empty(len(idxs), np.uint8)
    Q = q**m
    if q == 2:
        mask = Q - 1
        for pos, idx in enumerate(idxs):
            idx = int(idx)
            basis = []
            for _ in range(n):
                col = _reduce2(basis, idx & mask)
                idx >>= m
                if col:
                    basis.append((col & -col, col))
            out[pos] = len(basis)
        return out
    inv = [0] + [pow(v, -1, q) for v in range(1, q)]
    for pos, idx in enumerate(idxs):
        idx = int(idx)
        basis = []
        for _ in range(n):
            idx, e = divmod(idx, Q)
            col = _reduceq(basis, [(e // q**t) % q for t in range(m)], q)
            lead = next((t for t, x in enumerate(col) if x), -1)
            if lead >= 0:
                ci = inv[col[lead]]
                basis.append((lead, [x * ci % q for x in col]))
        out[pos] = len(basis)
    return out


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------


def enumerate_codewords(q: int, m: int, n: int, k: int, contrib: np.ndarray) -> np.ndarray:
    """All q^(mk) codeword indices, in lexicographic message order.

    contrib[b][v] is the encoded vector contributed when base-q message
    digit b (0 = least significant) has value v; codewords are carry-free
    digit sums of their contributions.
    """
    positions = m * n
    words = np.zeros(1, np.int64)
    for b in range(m * k):
        blocks = [words]
        for v in range(1, q):
            blocks.append(_cf_add(words, int(contrib[b, v]), q, positions))
        words = np.concatenate(blocks)
    return words


# ---------------------------------------------------------------------------
# ambient-space sweeps
# ---------------------------------------------------------------------------


def _block_min_dists(q, m, n, xs, words, table, skip_members):
    """min over codewords of table[x - c] for each x in the block."""
    positions = m * n
    dmin = np.full(xs.shape, 255, np.uint8)
    if skip_members:
        member = np.isin(xs, words)
        dmin[member] = 0
        if member.all():
            return dmin
        rest = xs[~member]
    else:
        member = None
        rest = xs
    sub = np.full(rest.shape, 255, np.uint8)
    for c in words:
        d = table[_cf_sub(rest, int(c), q, positions)]
        np.minimum(sub, d, out=sub)
    if member is None:
        return sub
    dmin[~member] = sub
    return dmin


def covering_sweep(q, m, n, words, table, start, stop):
    """(max over x in [start, stop) of min dist to code, first x attaining it)."""
    best, wit = -1, -1
    for s in range(start, stop, _BLOCK):
        e = min(s + _BLOCK, stop)
        xs = np.arange(s, e, dtype=np.int64)
        dmin = _block_min_dists(q, m, n, xs, words, table, skip_members=True)
        blk_best = int(dmin.max())
        if blk_best > best:
            best = blk_best
            wit = s + int(np.argmax(dmin))
    return best, wit


def maximal_sweep(q, m, n, words, table, threshold, start, stop):
    """First x in [start, stop) at distance >= threshold from every codeword, or -1."""
    positions = m * n
    for s in range(start, stop, _BLOCK):
        e = min(s + _BLOCK, stop)
        xs = np.arange(s, e, dtype=np.int64)
        alive = ~np.isin(xs, words) if threshold >= 1 else np.ones(xs.shape, bool)
        for c in words:
            if not alive.any():
                break
            d = table[_cf_sub(xs, int(c), q, positions)]
            alive &= d >= threshold
        if alive.any():
            return s + int(np.argmax(alive))
    return -1


def min_dists(q, m, n, xs, words, table):
    """Min distance to the code for each x in xs (xs need not be a range)."""
    out = np.empty(len(xs), np.uint8)
    for s in range(0, len(xs), _BLOCK):
        block = np.ascontiguousarray(xs[s : s + _BLOCK])
        out[s : s + _BLOCK] = _block_min_dists(
            q, m, n, block, words, table, skip_members=False
        )
    return out
