"""Skew polynomials over F_p[v]/(v^3 - v), twisted by one of the six automorphisms.

Addition is the usual coefficientwise one; multiplication follows the
monomial rule a*x^i * b*x^j = a * theta^i(b) * x^{i+j}, extended
bilinearly.  For theta != identity the ring is noncommutative.  Right
division by a divisor with unit leading coefficient is supported, which is
what code construction needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automorphisms import theta_apply, theta_order, theta_power_id
from .errors import ContextMismatch, NotDivisible
from .ring import PrimeModulus, RingElement, classify, inv


@dataclass(frozen=True)
class SkewPolynomial:
    """Dense coefficient sequence, ascending degree, no trailing zeros."""

    coeffs: tuple[RingElement, ...]
    theta: int
    modulus: PrimeModulus

    def __post_init__(self):
        coeffs = list(self.coeffs)
        for c in coeffs:
            if c.modulus != self.modulus:
                raise ContextMismatch("coefficient modulus differs from ring modulus")
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, theta: int, modulus: PrimeModulus) -> "SkewPolynomial":
        return cls((), theta, modulus)

    @classmethod
    def one(cls, theta: int, modulus: PrimeModulus) -> "SkewPolynomial":
        return cls((RingElement.one(modulus),), theta, modulus)

    @classmethod
    def monomial(
        cls, coeff: RingElement, degree: int, theta: int, modulus: PrimeModulus
    ) -> "SkewPolynomial":
        pad = [RingElement.zero(modulus)] * degree
        return cls((*pad, coeff), theta, modulus)

    @classmethod
    def from_triples(
        cls,
        triples: Sequence[tuple[int, int, int]],
        theta: int,
        modulus: PrimeModulus,
    ) -> "SkewPolynomial":
        return cls(
            tuple(RingElement(a, b, c, modulus) for a, b, c in triples),
            theta,
            modulus,
        )

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> RingElement:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == RingElement.one(self.modulus)

    def coeff(self, i: int) -> RingElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RingElement.zero(self.modulus)

    def _check(self, other: "SkewPolynomial") -> None:
        if self.theta != other.theta or self.modulus != other.modulus:
            raise ContextMismatch(
                f"cannot combine twists theta_{self.theta}/p={self.modulus.p} "
                f"with theta_{other.theta}/p={other.modulus.p}"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(
            tuple(self.coeff(i) + other.coeff(i) for i in range(n)),
            self.theta,
            self.modulus,
        )

    def __neg__(self) -> "SkewPolynomial":
        return SkewPolynomial(
            tuple(-c for c in self.coeffs), self.theta, self.modulus
        )

    def __sub__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        return self + (-other)

    def __mul__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        self._check(other)
        if self.is_zero or other.is_zero:
            return SkewPolynomial.zero(self.theta, self.modulus)
        zero = RingElement.zero(self.modulus)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if fi.is_zero:
                continue
            tid = theta_power_id(self.theta, i, self.modulus)
            for j, gj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + fi * theta_apply(tid, gj)
        return SkewPolynomial(tuple(out), self.theta, self.modulus)

    def right_divmod(
        self, divisor: "SkewPolynomial"
    ) -> tuple["SkewPolynomial", "SkewPolynomial"]:
        """Quotient and remainder with self = q * divisor + r, deg r < deg divisor.

        The divisor's leading coefficient must be a unit; each step
        eliminates the running leading term with the quotient term
        lc(r) * theta^{deg r - deg g}(lc(g))^{-1} * x^{deg r - deg g}.
        """
        self._check(divisor)
        if divisor.is_zero:
            raise NotDivisible("division by the zero polynomial")
        lead_cls = classify(divisor.leading)
        if not lead_cls.is_unit:
            raise NotDivisible(
                f"divisor leading coefficient {divisor.leading} is "
                f"{lead_cls.kind}; right division needs a unit"
            )
        zero = RingElement.zero(self.modulus)
        e = divisor.degree
        rem = list(self.coeffs)
        quo = [zero] * max(len(self.coeffs) - e, 0)
        while len(rem) - 1 >= e:
            if rem[-1].is_zero:
                rem.pop()
                continue
            k = len(rem) - 1 - e
            tid = theta_power_id(self.theta, k, self.modulus)
            c = rem[-1] * inv(theta_apply(tid, divisor.leading))
            quo[k] = quo[k] + c
            for j, gj in enumerate(divisor.coeffs):
                rem[k + j] = rem[k + j] - c * theta_apply(tid, gj)
            rem.pop()
        return (
            SkewPolynomial(tuple(quo), self.theta, self.modulus),
            SkewPolynomial(tuple(rem), self.theta, self.modulus),
        )

    def __str__(self):
        if self.is_zero:
            return "0,0,0"
        return ";".join(str(c) for c in self.coeffs)


def x_pow_n_minus_1(n: int, theta: int, modulus: PrimeModulus) -> SkewPolynomial:
    """The polynomial x^n - 1."""
    coeffs = [RingElement.zero(modulus)] * (n + 1)
    coeffs[0] = -RingElement.one(modulus)
    coeffs[n] = RingElement.one(modulus)
    return SkewPolynomial(tuple(coeffs), theta, modulus)


__all__ = [
    "SkewPolynomial",
    "x_pow_n_minus_1",
    "theta_order",
]
