"""Exact algebra over F_p[v]/(v^3 - v): ring arithmetic, the six
automorphisms with a brute-force verifier, skew polynomials, and skew
cyclic codes."""

from .automorphisms import (
    AUTOMORPHISM_IDS,
    EndomorphismCandidate,
    GroupTable,
    compose,
    enumerate_automorphisms_bruteforce,
    enumerate_endomorphism_candidates,
    group_table,
    onto_witness_theta3,
    theta_apply,
    theta_apply_via_image,
    theta_image_of_v,
    theta_order,
)
from .errors import (
    BudgetExceeded,
    ContextMismatch,
    InternalMismatch,
    MessageTooLong,
    ModulusMismatch,
    NonMonicGenerator,
    NotDivisible,
    NotInvertible,
    NotRightDivisor,
    OrderMismatch,
    SkewRingError,
)
from .ring import (
    Classification,
    CrtTriple,
    PrimeModulus,
    RingElement,
    all_elements,
    classify,
    fp_inv,
    inv,
    is_zero_divisor,
)
from .skew_cyclic import (
    Codeword,
    SkewCyclicCode,
    build_code,
    encode,
    is_member,
    min_hamming_distance,
    theta_shift,
)
from .skew_poly import SkewPolynomial, x_pow_n_minus_1

__version__ = "0.1.0"
