"""Text literals for elements, polynomials and codewords.

Element literal: "a,b,c" with decimal canonical residues, e.g. "2,1,0" is
2 + v.  Polynomial and codeword literals are element literals joined by
";" in ascending degree / position order.
"""

from __future__ import annotations

from .ring import PrimeModulus, RingElement
from .skew_cyclic import Codeword
from .skew_poly import SkewPolynomial


class LiteralError(ValueError):
    """Malformed element/polynomial literal (a usage error, not a domain one)."""


def parse_element(text: str, modulus: PrimeModulus) -> RingElement:
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise LiteralError(f"element literal must be 'a,b,c', got {text!r}")
    try:
        a, b, c = (int(s) for s in parts)
    except ValueError:
        raise LiteralError(f"non-integer coefficient in {text!r}") from None
    return RingElement(a, b, c, modulus)


def parse_poly(text: str, theta: int, modulus: PrimeModulus) -> SkewPolynomial:
    coeffs = tuple(parse_element(part, modulus) for part in text.strip().split(";"))
    return SkewPolynomial(coeffs, theta, modulus)


def parse_codeword(text: str, modulus: PrimeModulus) -> Codeword:
    entries = tuple(parse_element(part, modulus) for part in text.strip().split(";"))
    return Codeword(entries)


def element_json(z: RingElement) -> dict:
    return {"a": z.a, "b": z.b, "c": z.c}


def poly_json(f: SkewPolynomial) -> list[dict]:
    return [element_json(c) for c in f.coeffs]


def codeword_json(c: Codeword) -> list[dict]:
    return [element_json(e) for e in c.entries]
