"""Exact counts of vectors by rank weight, ball volumes, and Hamming analogues.

All values are arbitrary-precision integers: the length-32 comparison
table reaches past 10^300, so floating point is banned in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NotPrime, OutOfRange
from .field import is_prime


@dataclass(frozen=True)
class CountResult:
    """An exact nonnegative count with its (q, m, n, w) parameters."""

    value: int
    q: int
    m: int
    n: int
    w: int

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value


def _check_params(q: int, m: int, n: int, w: int):
    if not is_prime(q):
        raise NotPrime(q)
    if m < 1 or n < 1:
        raise OutOfRange(f"m and n must be >= 1, got m={m} n={n}")
    if w < 0:
        raise OutOfRange(f"w must be >= 0, got w={w}")


def count_rank_weight(q: int, m: int, n: int, w: int) -> CountResult:
    """Number of vectors in GF(q^m)^n with rank weight exactly w.

    Evaluates prod_{i<w} (q^n - q^i)(q^m - q^i) / (q^w - q^i) with a single
    exact division at the end; a nonzero remainder would mean a bug, so it
    is asserted away.  Returns 0 for w > min(n, m) and 1 for w = 0.
    """
    _check_params(q, m, n, w)
    if w > min(n, m):
        return CountResult(0, q, m, n, w)
    num = 1
    den = 1
    for i in range(w):
        num *= (q**n - q**i) * (q**m - q**i)
        den *= q**w - q**i
    value, rem = divmod(num, den)
    assert rem == 0, f"non-exact division in rank count ({q},{m},{n},{w})"
    return CountResult(value, q, m, n, w)


def ball_volume(q: int, m: int, n: int, w: int) -> CountResult:
    """Number of vectors within rank distance w of a fixed center.

    w is clamped to min(n, m), so the whole-space volume q^(mn) is returned
    for any larger radius.
    """
    _check_params(q, m, n, w)
    top = min(w, n, m)
    value = sum(count_rank_weight(q, m, n, j).value for j in range(top + 1))
    return CountResult(value, q, m, n, w)


def count_hamming_weight(q: int, m: int, n: int, w: int) -> CountResult:
    """Number of vectors in GF(q^m)^n with Hamming weight exactly w.

    (q^m - 1)^w * C(n, w); zero for w > n so weight tables can iterate
    uniformly alongside the rank counts.
    """
    _check_params(q, m, n, w)
    if w > n:
        return CountResult(0, q, m, n, w)
    value = (q**m - 1) ** w * comb(n, w)
    return CountResult(value, q, m, n, w)
