"""Exact arithmetic in GF(q) and its extensions GF(q^m).

Elements of GF(q^m) are coefficient vectors over the prime field GF(q) in
the polynomial basis 1, x, ..., x^(m-1) modulo a monic irreducible
polynomial of degree m.  Polynomials are coefficient tuples, low degree
first.  Everything here is immutable and exact; there is no floating
point anywhere.

An element also has a canonical integer encoding sum(c_t * q^t), used by
the CLI and by the enumeration kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    Reducible,
)

# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------

# Witness set deterministic for all n < 3.3 * 10^24 (more than enough here).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for moduli of field size."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(q): tuples of ints in [0, q), low degree first.
# The zero polynomial is the empty tuple.
# ---------------------------------------------------------------------------


def _trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _padd(a, b, q):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _trim(tuple((x + y) % q for x, y in zip(a, b)))


def _psub(a, b, q):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _trim(tuple((x - y) % q for x, y in zip(a, b)))


def _pmul(a, b, q):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _trim(tuple(out))


def _pdivmod(a, b, q):
    """Polynomial division over GF(q); b must be nonzero."""
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, q)
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(rem) - len(b), -1, -1):
        coeff = rem[i + len(b) - 1] * inv_lead % q
        if coeff:
            quo[i] = coeff
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - coeff * y) % q
    return _trim(tuple(quo)), _trim(tuple(rem))


def _pmod(a, b, q):
    return _pdivmod(a, b, q)[1]


def _pgcd(a, b, q):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, q)
    return a


def _ppowmod(base, e: int, mod, q):
    """base^e reduced modulo mod, by square and multiply."""
    result = (1,)
    base = _pmod(base, mod, q)
    while e > 0:
        if e & 1:
            result = _pmod(_pmul(result, base, q), mod, q)
        base = _pmod(_pmul(base, base, q), mod, q)
        e >>= 1
    return result


def _pext_gcd(a, b, q):
    """Return (g, s) with s*a == g (mod b), g = gcd(a, b)."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = (1,), ()
    while r1:
        quo, rem = _pdivmod(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(s0, _pmul(quo, s1, q), q)
    return r0, s0


def is_irreducible(poly: tuple[int, ...], q: int) -> bool:
    """Rabin's deterministic irreducibility test over GF(q).

    ``poly`` must be monic of degree >= 1.  Checks x^(q^m) == x mod poly
    and gcd(x^(q^(m/p)) - x, poly) == 1 for every prime p dividing m.
    """
    poly = _trim(poly)
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = (0, 1)
    # x^(q^j) mod poly for j = 1..m, built by repeated q-th powering.
    powers = [x]
    t = x
    for _ in range(m):
        t = _ppowmod(t, q, poly, q)
        powers.append(t)
    if _psub(powers[m], x, q):
        return False
    mm = m
    p = 2
    while p * p <= mm:
        if mm % p == 0:
            g = _pgcd(_psub(powers[m // p], x, q), poly, q)
            if len(g) != 1:
                return False
            while mm % p == 0:
                mm //= p
        p += 1
    if mm > 1:  # mm is the last prime factor of m
        g = _pgcd(_psub(powers[m // mm], x, q), poly, q)
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(q: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(q).

    Coefficient tuples (c_0, ..., c_{m-1}) are compared low-degree-first;
    the leading coefficient is fixed at 1.
    """
    # c_0 = 0 means divisible by x, reducible for m >= 2; skip that prefix.
    start = q ** (m - 1) if m >= 2 else 0
    for idx in range(start, q**m):
        coeffs = tuple((idx // q ** (m - 1 - t)) % q for t in range(m))
        poly = coeffs + (1,)
        if is_irreducible(poly, q):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({q})")


# ---------------------------------------------------------------------------
# Field types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(q)."""

    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise NotPrime(self.q)

    def __repr__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class ExtensionField:
    """GF(q^m) with a fixed monic irreducible modulus and polynomial basis.

    Two descriptors compare equal iff (q, m, modulus) agree; elements of
    equal fields interoperate freely.
    """

    base: PrimeField
    m: int
    modulus: tuple[int, ...]  # m+1 coefficients, low degree first, monic

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def order(self) -> int:
        return self.q**self.m

    @property
    def basis(self) -> tuple[FieldElement, ...]:
        """The polynomial basis 1, x, ..., x^(m-1)."""
        return tuple(self.from_int(self.q**t) for t in range(self.m))

    def element(self, coeffs) -> FieldElement:
        """Element from a coefficient sequence (low degree first, len <= m)."""
        coeffs = tuple(int(c) % self.q for c in coeffs)
        if len(coeffs) > self.m:
            raise DegreeMismatch(
                f"element needs at most {self.m} coefficients, got {len(coeffs)}"
            )
        coeffs = coeffs + (0,) * (self.m - len(coeffs))
        return FieldElement(self, coeffs)

    def from_int(self, code: int) -> FieldElement:
        """Element from its integer encoding sum(c_t * q^t)."""
        if not 0 <= code < self.order:
            raise ValueError(f"element code {code} outside [0, {self.order})")
        coeffs = []
        for _ in range(self.m):
            code, r = divmod(code, self.q)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def gen(self) -> FieldElement:
        """The basis element x (reduced mod the modulus when m == 1)."""
        if self.m == 1:
            return self.element(((-self.modulus[0]) % self.q,))
        return self.from_int(self.q)

    def elements(self):
        """All q^m elements, in integer-encoding order."""
        for code in range(self.order):
            yield self.from_int(code)

    def __repr__(self):
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.q}^{self.m}; {mod})"

    def spec(self) -> str:
        """The CLI field-spec string 'q^m/c0,c1,...'."""
        return f"{self.q}^{self.m}/" + ",".join(str(c) for c in self.modulus)


@dataclass(frozen=True)
class FieldElement:
    """An element of an ExtensionField, as a length-m coefficient tuple."""

    field: ExtensionField
    coeffs: tuple[int, ...]

    def _check(self, other: FieldElement):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"mixed fields {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        q = self.field.q
        return FieldElement(
            self.field, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        q = self.field.q
        return FieldElement(
            self.field, tuple((a - b) % q for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        q = self.field.q
        return FieldElement(self.field, tuple(-a % q for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        prod = _pmul(_trim(self.coeffs), _trim(other.coeffs), f.q)
        rem = _pmod(prod, f.modulus, f.q)
        return f.element(rem)

    def inverse(self) -> FieldElement:
        f = self.field
        a = _trim(self.coeffs)
        if not a:
            raise DivisionByZero("0 has no multiplicative inverse")
        g, s = _pext_gcd(a, f.modulus, f.q)
        # gcd with an irreducible modulus is a nonzero constant
        c = pow(g[0], -1, f.q)
        return f.element(tuple(x * c % f.q for x in s))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, i: int, step: int = 1) -> FieldElement:
        """self raised to q^(step*i), by repeated q-th powering.

        The Frobenius x -> x^q generates a cyclic group of order m, so the
        exponent count reduces mod m without changing the value.
        """
        if step < 1:
            raise ValueError(f"frobenius step must be >= 1, got {step}")
        if i < 0:
            raise ValueError(f"frobenius index must be >= 0, got {i}")
        t = (i * step) % self.field.m
        out = self
        for _ in range(t):
            out = out ** self.field.q
        return out

    def to_int(self) -> int:
        """Integer encoding sum(c_t * q^t)."""
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.field.q + c
        return code

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        terms = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if t == 0:
                terms.append(str(c))
            else:
                lead = "" if c == 1 else str(c)
                terms.append(f"{lead}x" if t == 1 else f"{lead}x^{t}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self} in {self.field!r}>"


def make_field(q: int, m: int, modulus=None) -> ExtensionField:
    """Construct GF(q^m) over prime GF(q).

    With no modulus, the lexicographically smallest monic irreducible of
    degree m is chosen, so results are reproducible bit-for-bit.  A
    supplied modulus must be monic of degree m and irreducible.
    """
    base = PrimeField(q)  # raises NotPrime
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        mod = smallest_irreducible(q, m)
    else:
        mod = tuple(int(c) % q for c in modulus)
        if len(_trim(mod)) != m + 1:
            raise DegreeMismatch(
                f"modulus must be monic of degree {m}, got {list(modulus)}"
            )
        if mod[-1] != 1:
            raise DegreeMismatch(f"modulus must be monic, got {list(modulus)}")
        if not is_irreducible(mod, q):
            raise Reducible(f"modulus {list(modulus)} is reducible over GF({q})")
    return ExtensionField(base, m, mod)


def parse_field_spec(spec: str) -> ExtensionField:
    """Parse 'q^m/c0,c1,...' or 'q^m' (default modulus) or plain 'q'."""
    body, _, poly = spec.partition("/")
    if "^" in body:
        q_s, _, m_s = body.partition("^")
        q, m = int(q_s), int(m_s)
    else:
        q, m = int(body), 1
    modulus = None
    if poly:
        modulus = [int(c) for c in poly.split(",")]
    return make_field(q, m, modulus)


def frobenius(a: FieldElement, i: int, step: int = 1) -> FieldElement:
    """Module-level alias for FieldElement.frobenius."""
    return a.frobenius(i, step)
