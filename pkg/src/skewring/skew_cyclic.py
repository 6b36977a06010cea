"""Skew cyclic codes over F_p[v]/(v^3 - v).

A code of length n is the set of coefficient vectors of m(x) * g(x) where
g is a monic right divisor of x^n - 1 in the twisted polynomial ring and
deg m < n - deg g.  Such codes are closed under the twisted shift
(c_0, ..., c_{n-1}) -> (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .automorphisms import theta_apply, theta_order
from .errors import (
    BudgetExceeded,
    ContextMismatch,
    MessageTooLong,
    NonMonicGenerator,
    NotRightDivisor,
    OrderMismatch,
)
from .ring import PrimeModulus, RingElement, all_elements
from .skew_poly import SkewPolynomial, x_pow_n_minus_1

DEFAULT_DISTANCE_BUDGET = 2**24


@dataclass(frozen=True)
class Codeword:
    """A fixed-length vector of ring elements."""

    entries: tuple[RingElement, ...]

    def __len__(self):
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(1 for e in self.entries if not e.is_zero)

    def __str__(self):
        return ";".join(str(e) for e in self.entries)


def theta_shift(c: Codeword, theta: int) -> Codeword:
    """Rotate right by one position and apply theta to every entry."""
    rotated = (c.entries[-1],) + c.entries[:-1]
    return Codeword(tuple(theta_apply(theta, e) for e in rotated))


@dataclass(frozen=True)
class SkewCyclicCode:
    """Length-n code generated by a monic right divisor g of x^n - 1."""

    n: int
    theta: int
    generator: SkewPolynomial
    modulus: PrimeModulus
    k: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "k", self.n - self.generator.degree)

    @property
    def cardinality(self) -> int:
        return self.modulus.p ** (3 * self.k)


def build_code(
    modulus: PrimeModulus, theta: int, n: int, g: SkewPolynomial
) -> SkewCyclicCode:
    """Validate (theta, n, g) and construct the code.

    Requires g monic with deg g < n, ord(theta) | n, and zero remainder of
    x^n - 1 under right division by g.  Without ord(theta) | n the shift
    closure of the principal construction is not guaranteed.
    """
    if g.theta != theta or g.modulus != modulus:
        raise ContextMismatch("generator twist/modulus differs from code context")
    if n < 1:
        raise ValueError(f"code length must be positive, got {n}")
    if g.is_zero or not g.is_monic:
        raise NonMonicGenerator(f"generator {g} is not monic")
    if g.degree >= n:
        raise NonMonicGenerator(
            f"generator degree {g.degree} must be below the length {n}"
        )
    order = theta_order(theta)
    if n % order != 0:
        raise OrderMismatch(
            f"theta_{theta} has order {order}, which does not divide n={n}"
        )
    _, r = x_pow_n_minus_1(n, theta, modulus).right_divmod(g)
    if not r.is_zero:
        raise NotRightDivisor(
            f"x^{n} - 1 has remainder {r} under right division by {g}"
        )
    return SkewCyclicCode(n=n, theta=theta, generator=g, modulus=modulus)


def encode(code: SkewCyclicCode, m: SkewPolynomial) -> Codeword:
    """Codeword of the message polynomial m, deg m < k."""
    if m.theta != code.theta or m.modulus != code.modulus:
        raise ContextMismatch("message twist/modulus differs from code context")
    if m.degree >= code.k:
        raise MessageTooLong(
            f"message degree {m.degree} exceeds rank bound {code.k - 1}"
        )
    word = m * code.generator
    return Codeword(tuple(word.coeff(i) for i in range(code.n)))


def is_member(code: SkewCyclicCode, c: Codeword) -> bool:
    """True iff the polynomial of c right-reduces to zero modulo g."""
    if len(c) != code.n:
        raise ValueError(f"codeword length {len(c)} != code length {code.n}")
    poly = SkewPolynomial(c.entries, code.theta, code.modulus)
    _, r = poly.right_divmod(code.generator)
    return r.is_zero


def iter_messages(code: SkewCyclicCode):
    """All p^{3k} message polynomials, lexicographic in coefficient triples."""
    elements = all_elements(code.modulus)
    for coeffs in itertools.product(elements, repeat=code.k):
        yield SkewPolynomial(coeffs, code.theta, code.modulus)


def min_hamming_distance(
    code: SkewCyclicCode, budget: int = DEFAULT_DISTANCE_BUDGET
) -> int:
    """Minimum weight over all nonzero codewords, by full enumeration."""
    if code.cardinality > budget:
        raise BudgetExceeded(required=code.cardinality, budget=budget)
    best = code.n + 1
    for m in iter_messages(code):
        if m.is_zero:
            continue
        w = encode(code, m).weight
        if w < best:
            best = w
            if best == 1:
                break
    return best
