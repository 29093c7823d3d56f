"""Exception types shared by all rankcodes modules."""


class RankCodesError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(RankCodesError, ValueError):
    """The base field modulus q is not a prime number."""

    def __init__(self, q):
        super().__init__(f"q must be prime, got {q}")
        self.q = q


class Reducible(RankCodesError, ValueError):
    """A supplied field modulus polynomial is reducible over GF(q)."""


class DegreeMismatch(RankCodesError, ValueError):
    """A polynomial or coefficient vector has the wrong degree/length."""


class FieldMismatch(RankCodesError, ValueError):
    """Operands belong to different fields (no silent coercion)."""


class DivisionByZero(RankCodesError, ZeroDivisionError):
    """Multiplicative inverse of the zero element requested."""


class LengthMismatch(RankCodesError, ValueError):
    """Vectors or messages of incompatible lengths."""


class BadDimension(RankCodesError, ValueError):
    """Code dimension k outside 1 <= k <= n (or similar size violation)."""


class BadDistance(RankCodesError, ValueError):
    """Minimum distance outside 1 <= d <= min(n, m)."""


class OutOfRange(RankCodesError, ValueError):
    """Argument outside the domain of an asymptotic bound."""


class LengthExceedsM(RankCodesError, ValueError):
    """Gabidulin generator vector longer than the extension degree m."""


class DependentGenerators(RankCodesError, ValueError):
    """Generator entries/rows are linearly dependent."""


class BadFrobeniusStep(RankCodesError, ValueError):
    """Frobenius step a with gcd(a, m) != 1."""


class NotNested(RankCodesError, ValueError):
    """The alleged subcode is not contained in the supercode."""


class NotStrict(RankCodesError, ValueError):
    """Subcode and supercode coincide; a strict inclusion is required."""


class ResourceLimit(RankCodesError):
    """An exhaustive enumeration would exceed the caller's budget.

    ``required`` carries the exact enumeration count so callers can raise
    the budget deliberately.
    """

    def __init__(self, required, budget):
        super().__init__(
            f"enumeration needs {required} steps, over the budget of {budget}; "
            "pass a larger budget to proceed"
        )
        self.required = required
        self.budget = budget
