"""Singleton, Gilbert, and sphere-packing bounds, finite and asymptotic.

Finite bounds are exact rationals over the exact ball volumes; the three
asymptotic curves are rational functions of the relative distance delta
and the aspect ratio b = lim n/m.  Exactness matters: the transpose
symmetry and the ordering of the curves are asserted as rational
identities, not float comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import ball_volume
from .errors import BadDimension, BadDistance, OutOfRange

Rational = Fraction | int | str


@dataclass(frozen=True)
class BoundReport:
    """Exact finite-length bounds on the size of a code with min distance d.

    ``singleton_dmax`` is the largest minimum rank distance any nontrivial
    (k >= 1) code of these parameters can have, i.e. the k = 1 Singleton
    cap; d must not exceed it.
    """

    q: int
    m: int
    n: int
    d: int
    t: int
    singleton_dmax: int
    gilbert_lower: Fraction
    gilbert_lower_ceil: int
    sphere_packing_upper: Fraction
    sphere_packing_upper_floor: int


@dataclass(frozen=True)
class AsymptoticPoint:
    """All three asymptotic bound values at one (b, delta) grid point."""

    b: Fraction
    delta: Fraction
    gv: Fraction
    sphere_packing: Fraction
    singleton: Fraction


def singleton_dmax(q: int, m: int, n: int, k: int) -> int:
    """Largest minimum rank distance allowed for an (n, k) code over GF(q^m).

    min(n - k + 1, floor((m/n)(n - k)) + 1); the second term is the tighter
    one whenever n > m.
    """
    if not 1 <= k <= n:
        raise BadDimension(f"need 1 <= k <= n, got k={k} n={n}")
    if m < 1:
        raise BadDimension(f"need m >= 1, got m={m}")
    return min(n - k + 1, (m * (n - k)) // n + 1)


def finite_bounds(q: int, m: int, n: int, d: int) -> BoundReport:
    """Gilbert lower and sphere-packing upper bounds on A_{q^m}(n, d).

    Both are exact rationals q^(mn) / V(n, r) with r = d-1 and
    r = t = floor((d-1)/2) respectively, plus their integer roundings.
    """
    if not 1 <= d <= min(n, m):
        raise BadDistance(f"need 1 <= d <= min(n, m) = {min(n, m)}, got d={d}")
    space = q ** (m * n)
    t = (d - 1) // 2
    gilbert = Fraction(space, ball_volume(q, m, n, d - 1).value)
    sphere = Fraction(space, ball_volume(q, m, n, t).value)
    return BoundReport(
        q=q,
        m=m,
        n=n,
        d=d,
        t=t,
        singleton_dmax=singleton_dmax(q, m, n, 1),
        gilbert_lower=gilbert,
        gilbert_lower_ceil=math.ceil(gilbert),
        sphere_packing_upper=sphere,
        sphere_packing_upper_floor=math.floor(sphere),
    )


def _domain(b: Rational, delta: Rational) -> tuple[Fraction, Fraction]:
    b = Fraction(b)
    delta = Fraction(delta)
    if b < 0:
        raise OutOfRange(f"aspect ratio b must be >= 0, got {b}")
    top = delta_max(b)
    if not 0 <= delta <= top:
        raise OutOfRange(f"delta must lie in [0, {top}] for b={b}, got {delta}")
    return b, delta


def delta_max(b: Rational) -> Fraction:
    """Right end of the delta domain: min(1, 1/b), with b = 0 allowed as a limit."""
    b = Fraction(b)
    if b < 0:
        raise OutOfRange(f"aspect ratio b must be >= 0, got {b}")
    return min(Fraction(1), 1 / b) if b > 0 else Fraction(1)


def asym_gv(b: Rational, delta: Rational) -> Fraction:
    """Asymptotic Gilbert-Varshamov lower bound (1 - delta)(1 - b*delta)."""
    b, delta = _domain(b, delta)
    return (1 - delta) * (1 - b * delta)


def asym_sphere_packing(b: Rational, delta: Rational) -> Fraction:
    """Asymptotic sphere-packing upper bound (1 - delta/2)(1 - b*delta/2)."""
    b, delta = _domain(b, delta)
    return (1 - delta / 2) * (1 - b * delta / 2)


def asym_singleton(b: Rational, delta: Rational) -> Fraction:
    """Asymptotic Singleton upper bound: 1 - delta for b <= 1, else 1 - b*delta."""
    b, delta = _domain(b, delta)
    return 1 - delta if b <= 1 else 1 - b * delta


def asym_curve(b: Rational, step: Rational) -> list[AsymptoticPoint]:
    """Sample all three bounds on the grid delta = 0, step, 2*step, ...

    The domain endpoint min(1, 1/b) is always emitted, even when it is not
    a multiple of step, so plotted curves close at the axis.
    """
    b = Fraction(b)
    step = Fraction(step)
    if not 0 < step <= 1:
        raise OutOfRange(f"step must lie in (0, 1], got {step}")
    top = delta_max(b)
    deltas = []
    i = 0
    while i * step < top:
        deltas.append(i * step)
        i += 1
    deltas.append(top)
    return [
        AsymptoticPoint(
            b=b,
            delta=d,
            gv=asym_gv(b, d),
            sphere_packing=asym_sphere_packing(b, d),
            singleton=asym_singleton(b, d),
        )
        for d in deltas
    ]
