"""Exception hierarchy shared by all modules.

Every mathematically meaningful failure derives from SkewRingError so the
CLI can map it to exit status 1, distinct from usage errors (status 2).
"""


class SkewRingError(Exception):
    """Base class for domain errors."""


class NotInvertible(SkewRingError):
    """Inversion of zero or a zero divisor was requested."""


class ModulusMismatch(SkewRingError):
    """Operands live over different prime moduli."""


class ContextMismatch(SkewRingError):
    """Skew polynomials with different twist or modulus were combined."""


class NotDivisible(SkewRingError):
    """Right division attempted by a divisor whose leading coefficient is not a unit."""


class NotRightDivisor(SkewRingError):
    """The proposed generator does not right-divide x^n - 1."""


class NonMonicGenerator(SkewRingError):
    """Code generators must be monic."""


class OrderMismatch(SkewRingError):
    """The order of the twisting automorphism does not divide the code length."""


class MessageTooLong(SkewRingError):
    """Message polynomial degree is at least the code rank."""


class BudgetExceeded(SkewRingError):
    """Exhaustive enumeration would exceed the allowed budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} codewords, exceeding budget {budget}"
        )


class InternalMismatch(SkewRingError):
    """A cross-check between two independent computations disagreed.

    Raised when the brute-force enumerator and the closed forms diverge;
    this signals a bug in the library, not bad input.
    """
