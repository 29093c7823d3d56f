# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernels.

Contracts are identical to ``_kernels_py`` (the reference backend): vector
indices are big-endian base-q^m encodings, ranks are GF(q) matrix ranks of
the coefficient expansion, and sweep results (including witnesses) are
bit-for-bit equal between backends.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef unsigned char u8

cdef enum:
    MAXDIM = 64  # upper bound on m and on base-q digit count


# ---------------------------------------------------------------------------
# per-vector rank computation
# ---------------------------------------------------------------------------

cdef inline int _rank_of2(unsigned long long idx, int m, int n) nogil:
    cdef unsigned long long mask = ((<unsigned long long>1) << m) - 1
    cdef unsigned long long basis[MAXDIM]
    cdef unsigned long long lead[MAXDIM]
    cdef unsigned long long col
    cdef int nb = 0, j, r
    for j in range(n):
        col = idx & mask
        idx >>= m
        for r in range(nb):
            if col & lead[r]:
                col ^= basis[r]
        if col:
            basis[nb] = col
            lead[nb] = col & (~col + 1)
            nb += 1
    return nb


cdef inline int _rank_ofq(long long idx, int q, int m, int n, long long Q,
                          short[::1] inv) nogil:
    cdef int col[MAXDIM]
    cdef int basis[MAXDIM][MAXDIM]
    cdef int lead[MAXDIM]
    cdef int nb = 0, j, r, t, c, ci, ld
    cdef long long e
    for j in range(n):
        e = idx % Q
        idx //= Q
        for t in range(m):
            col[t] = <int>(e % q)
            e //= q
        for r in range(nb):
            c = col[lead[r]]
            if c:
                for t in range(m):
                    col[t] = (col[t] - c * basis[r][t]) % q
                    if col[t] < 0:
                        col[t] += q
        ld = -1
        for t in range(m):
            if col[t]:
                ld = t
                break
        if ld >= 0:
            ci = inv[col[ld]]
            for t in range(m):
                basis[nb][t] = (col[t] * ci) % q
            lead[nb] = ld
            nb += 1
    return nb


cdef short[::1] _inv_table(int q):
    inv = np.zeros(q, dtype=np.int16)
    for v in range(1, q):
        inv[v] = pow(v, -1, q)
    return inv


def rank_table(int q, int m, int n):
    """uint8 array of length (q^m)^n: rank weight of every vector index."""
    cdef long long Q = 1, size = 1
    cdef int i
    for i in range(m):
        Q *= q
    for i in range(n):
        size *= Q
    out = np.empty(size, dtype=np.uint8)
    cdef u8[::1] ov = out
    cdef short[::1] inv
    cdef long long idx
    if q == 2:
        with nogil:
            for idx in range(size):
                ov[idx] = <u8>_rank_of2(<unsigned long long>idx, m, n)
    else:
        inv = _inv_table(q)
        with nogil:
            for idx in range(size):
                ov[idx] = <u8>_rank_ofq(idx, q, m, n, Q, inv)
    return out


def vector_ranks(int q, int m, int n, i64[::1] idxs):
    """Rank weight of each encoded vector in idxs."""
    cdef long long Q = 1, i
    cdef int t
    for t in range(m):
        Q *= q
    out = np.empty(idxs.shape[0], dtype=np.uint8)
    cdef u8[::1] ov = out
    cdef short[::1] inv
    if q == 2:
        with nogil:
            for i in range(idxs.shape[0]):
                ov[i] = <u8>_rank_of2(<unsigned long long>idxs[i], m, n)
    else:
        inv = _inv_table(q)
        with nogil:
            for i in range(idxs.shape[0]):
                ov[i] = <u8>_rank_ofq(idxs[i], q, m, n, Q, inv)
    return out


# ---------------------------------------------------------------------------
# carry-free base-q arithmetic on encoded indices
# ---------------------------------------------------------------------------

cdef inline long long _cf_add(long long a, long long b, int q, int positions) nogil:
    cdef long long out = 0, base = 1
    cdef int t, da, db
    for t in range(positions):
        da = <int>(a % q)
        a //= q
        db = <int>(b % q)
        b //= q
        out += ((da + db) % q) * base
        base *= q
    return out


cdef inline long long _cf_sub(long long a, long long b, int q, int positions) nogil:
    cdef long long out = 0, base = 1
    cdef int t, d
    for t in range(positions):
        d = <int>(a % q) - <int>(b % q)
        if d < 0:
            d += q
        a //= q
        b //= q
        out += d * base
        base *= q
    return out


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------

def enumerate_codewords(int q, int m, int n, int k, i64[:, ::1] contrib):
    """All q^(mk) codeword indices in lexicographic message order."""
    cdef int D = m * k, b, v
    cdef int positions = m * n
    cdef long long count = 1
    for b in range(D):
        count *= q
    out = np.empty(count, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef long long blk = 1, i, base
    ov[0] = 0
    with nogil:
        for b in range(D):
            for v in range(1, q):
                base = contrib[b, v]
                if q == 2:
                    for i in range(blk):
                        ov[blk + i] = ov[i] ^ base
                else:
                    for i in range(blk):
                        ov[v * blk + i] = _cf_add(ov[i], base, q, positions)
            blk *= q
    return out


# ---------------------------------------------------------------------------
# ambient-space sweeps
# ---------------------------------------------------------------------------

cdef inline long long _bsearch(i64[::1] a, long long x) nogil:
    cdef long long lo = 0, hi = a.shape[0] - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if a[mid] == x:
            return mid
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef void _cover(int q, int m, int n, i64[::1] words, i64[::1] swords,
                 u8[::1] table, long long start, long long stop,
                 long long* best, long long* wit) nogil:
    cdef long long x, ci, nw = words.shape[0]
    cdef long long b = -1, w = -1
    cdef int dmin, d
    cdef int positions = m * n
    for x in range(start, stop):
        if _bsearch(swords, x) >= 0:
            if b < 0:
                b = 0
                w = x
            continue
        dmin = 255
        for ci in range(nw):
            if q == 2:
                d = table[x ^ words[ci]]
            else:
                d = table[_cf_sub(x, words[ci], q, positions)]
            if d < dmin:
                dmin = d
                if dmin <= b:
                    break
        if dmin > b:
            b = dmin
            w = x
    best[0] = b
    wit[0] = w


def covering_sweep(int q, int m, int n, i64[::1] words, u8[::1] table,
                   long long start, long long stop):
    """(max over x in [start, stop) of min dist to code, first x attaining it)."""
    swords_arr = np.sort(np.asarray(words))
    cdef i64[::1] swords = swords_arr
    cdef long long best = -1, wit = -1
    with nogil:
        _cover(q, m, n, words, swords, table, start, stop, &best, &wit)
    return int(best), int(wit)


cdef long long _far(int q, int m, int n, i64[::1] words, i64[::1] swords,
                    u8[::1] table, int threshold,
                    long long start, long long stop) nogil:
    cdef long long x, ci, nw = words.shape[0]
    cdef int positions = m * n
    cdef bint ok
    cdef int d
    for x in range(start, stop):
        if _bsearch(swords, x) >= 0:
            continue  # distance 0 < threshold
        ok = True
        for ci in range(nw):
            if q == 2:
                d = table[x ^ words[ci]]
            else:
                d = table[_cf_sub(x, words[ci], q, positions)]
            if d < threshold:
                ok = False
                break
        if ok:
            return x
    return -1


def maximal_sweep(int q, int m, int n, i64[::1] words, u8[::1] table,
                  int threshold, long long start, long long stop):
    """First x in [start, stop) at distance >= threshold from every codeword, or -1."""
    if threshold < 1:
        return int(start) if start < stop else -1
    swords_arr = np.sort(np.asarray(words))
    cdef i64[::1] swords = swords_arr
    cdef long long res
    with nogil:
        res = _far(q, m, n, words, swords, table, threshold, start, stop)
    return int(res)


def min_dists(int q, int m, int n, i64[::1] xs, i64[::1] words, u8[::1] table):
    """Min distance to the code for each x in xs (xs need not be a range)."""
    out = np.empty(xs.shape[0], dtype=np.uint8)
    cdef u8[::1] ov = out
    cdef long long i, ci, nw = words.shape[0]
    cdef int positions = m * n
    cdef int dmin, d
    with nogil:
        for i in range(xs.shape[0]):
            dmin = 255
            for ci in range(nw):
                if q == 2:
                    d = table[xs[i] ^ words[ci]]
                else:
                    d = table[_cf_sub(xs[i], words[ci], q, positions)]
                if d < dmin:
                    dmin = d
                    if dmin == 0:
                        break
            ov[i] = <u8>dmin
    return out
