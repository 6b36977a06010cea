"""Exact arithmetic in R = F_p + vF_p + v^2F_p with v^3 = v, p an odd prime.

Elements are stored as canonical coefficient triples (a, b, c) meaning
a + b*v + c*v^2 with 0 <= a, b, c < p.  The ring splits as three copies of
F_p via evaluation of v at 0, 1 and -1; that decomposition drives unit
inversion and the zero-divisor test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatch, NotInvertible


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A validated odd prime, the characteristic of all arithmetic."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_odd_prime(self.p):
            raise ValueError(
                f"modulus must be an odd prime >= 3, got {self.p!r}"
            )

    @property
    def half(self) -> int:
        """The residue (p+1)/2, the inverse of 2 mod p."""
        return (self.p + 1) // 2

    def __repr__(self):
        return f"PrimeModulus({self.p})"


def fp_inv(x: int, modulus: PrimeModulus) -> int:
    """Inverse of the residue x in F_p; raises NotInvertible for x = 0."""
    p = modulus.p
    x %= p
    if x == 0:
        raise NotInvertible("0 has no inverse in F_p")
    return pow(x, p - 2, p)


@dataclass(frozen=True)
class RingElement:
    """The element a + b*v + c*v^2 over a fixed odd prime modulus."""

    a: int
    b: int
    c: int
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        object.__setattr__(self, "a", self.a % p)
        object.__setattr__(self, "b", self.b % p)
        object.__setattr__(self, "c", self.c % p)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> "RingElement":
        return cls(0, 0, 0, modulus)

    @classmethod
    def one(cls, modulus: PrimeModulus) -> "RingElement":
        return cls(1, 0, 0, modulus)

    @classmethod
    def gen(cls, modulus: PrimeModulus) -> "RingElement":
        """The ring generator v."""
        return cls(0, 1, 0, modulus)

    @classmethod
    def scalar(cls, a: int, modulus: PrimeModulus) -> "RingElement":
        return cls(a, 0, 0, modulus)

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def _check(self, other: "RingElement") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"operands over p={self.modulus.p} and p={other.modulus.p}"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(
            self.a + other.a, self.b + other.b, self.c + other.c, self.modulus
        )

    def __neg__(self) -> "RingElement":
        return RingElement(-self.a, -self.b, -self.c, self.modulus)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        # Full degree-4 expansion, then v^3 -> v and v^4 -> v^2.
        self._check(other)
        a1, b1, c1 = self.a, self.b, self.c
        a2, b2, c2 = other.a, other.b, other.c
        return RingElement(
            a1 * a2,
            a1 * b2 + b1 * a2 + b1 * c2 + c1 * b2,
            a1 * c2 + b1 * b2 + c1 * a2 + c1 * c2,
            self.modulus,
        )

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative powers not supported; use inv()")
        out = RingElement.one(self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- CRT decomposition -------------------------------------------------

    def to_crt(self) -> "CrtTriple":
        """Evaluations of the element at v = 0, 1, -1."""
        p = self.modulus.p
        return CrtTriple(
            self.a,
            (self.a + self.b + self.c) % p,
            (self.a - self.b + self.c) % p,
            self.modulus,
        )

    @classmethod
    def from_crt(cls, t: "CrtTriple") -> "RingElement":
        p = t.modulus.p
        half = t.modulus.half
        a = t.s0
        b = (t.s1 - t.s2) * half % p
        c = ((t.s1 + t.s2) * half - t.s0) % p
        return cls(a, b, c, t.modulus)

    def __str__(self):
        return f"{self.a},{self.b},{self.c}"


@dataclass(frozen=True)
class CrtTriple:
    """Componentwise image of an element in F_p x F_p x F_p."""

    s0: int
    s1: int
    s2: int
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        object.__setattr__(self, "s0", self.s0 % p)
        object.__setattr__(self, "s1", self.s1 % p)
        object.__setattr__(self, "s2", self.s2 % p)


# Condition labels, in the order they are checked.
COND_A = "a=0"
COND_AMB = "a-b+c=0"
COND_APB = "a+b+c=0"


@dataclass(frozen=True)
class Classification:
    """Outcome of the zero-divisor test on one element."""

    is_zero: bool
    is_zero_divisor: bool  # true for zero too; see conditions
    is_unit: bool
    conditions: tuple[str, ...]

    @property
    def kind(self) -> str:
        if self.is_zero:
            return "zero"
        if self.is_zero_divisor:
            return "zero divisor"
        return "unit"


def classify(z: RingElement) -> Classification:
    """Classify z as zero, proper zero divisor, or unit.

    z is a non-unit exactly when a = 0 or a-b+c = 0 or a+b+c = 0 mod p;
    these are the vanishing conditions of the three CRT components.
    """
    p = z.modulus.p
    conds = []
    if z.a % p == 0:
        conds.append(COND_A)
    if (z.a - z.b + z.c) % p == 0:
        conds.append(COND_AMB)
    if (z.a + z.b + z.c) % p == 0:
        conds.append(COND_APB)
    zero = z.is_zero
    return Classification(
        is_zero=zero,
        is_zero_divisor=bool(conds),
        is_unit=not conds,
        conditions=tuple(conds),
    )


def is_zero_divisor(z: RingElement) -> bool:
    """True iff some vanishing condition fires (the zero element included)."""
    return classify(z).is_zero_divisor


def inv(z: RingElement) -> RingElement:
    """Two-sided inverse of a unit, via componentwise CRT inversion."""
    cls = classify(z)
    if not cls.is_unit:
        raise NotInvertible(
            f"{z} is {cls.kind} ({', '.join(cls.conditions)}); no inverse"
        )
    t = z.to_crt()
    m = z.modulus
    return RingElement.from_crt(
        CrtTriple(fp_inv(t.s0, m), fp_inv(t.s1, m), fp_inv(t.s2, m), m)
    )


def all_elements(modulus: PrimeModulus) -> list[RingElement]:
    """All p^3 elements in lexicographic (a, b, c) order."""
    p = modulus.p
    return [
        RingElement(a, b, c, modulus)
        for a in range(p)
        for b in range(p)
        for c in range(p)
    ]
