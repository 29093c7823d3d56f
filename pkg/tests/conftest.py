from math import gcd

import pytest

from rankcodes import default_generator_vector, make_field, make_gabidulin


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4)


def valid_frobenius_steps(m):
    """All distinct generalized-Gabidulin steps: 1 <= a < max(m, 2), gcd(a, m) = 1."""
    if m == 1:
        return [1]
    return [a for a in range(1, m) if gcd(a, m) == 1]


def gabidulin_family(max_m=4, q=2):
    """Every (generalized) Gabidulin code with m <= max_m over the default g."""
    for m in range(1, max_m + 1):
        field = make_field(q, m)
        for n in range(1, m + 1):
            g = default_generator_vector(field, n)
            for k in range(1, n + 1):
                for a in valid_frobenius_steps(m):
                    yield make_gabidulin(field, g, k, a)
