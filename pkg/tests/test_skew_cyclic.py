import random

import pytest

from skewring import (
    BudgetExceeded,
    Codeword,
    MessageTooLong,
    NonMonicGenerator,
    NotRightDivisor,
    OrderMismatch,
    PrimeModulus,
    RingElement,
    SkewPolynomial,
    all_elements,
    build_code,
    encode,
    is_member,
    min_hamming_distance,
    theta_shift,
    x_pow_n_minus_1,
)
from skewring.skew_cyclic import iter_messages

P3 = PrimeModulus(3)


def poly(triples, theta, pm=P3):
    return SkewPolynomial.from_triples(triples, theta, pm)


def word(triples, pm=P3):
    return Codeword(tuple(RingElement(a, b, c, pm) for a, b, c in triples))


@pytest.fixture(scope="module")
def reference_code():
    """p=3, theta_2, n=4, g = x^2 + 1."""
    g = poly([(1, 0, 0), (0, 0, 0), (1, 0, 0)], 2)
    return build_code(P3, 2, 4, g)


class TestThetaShift:
    def test_plain_rotation_identity_twist(self):
        c = word([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)])
        assert theta_shift(c, 1) == word(
            [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_scalar_word_theta2(self):
        c = word([(1, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0)])
        assert theta_shift(c, 2) == word(
            [(0, 0, 0), (1, 0, 0), (0, 0, 0), (1, 0, 0)])

    def test_full_rotation_returns_word(self):
        rng = random.Random(8)
        for theta, order in ((1, 1), (2, 2), (3, 3)):
            n = 6  # divisible by every order
            c = Codeword(tuple(
                RingElement(rng.randrange(3), rng.randrange(3),
                            rng.randrange(3), P3)
                for _ in range(n)))
            out = c
            for _ in range(n * order):
                out = theta_shift(out, theta)
            assert out == c


class TestBuildCode:
    def test_classical_repetition_style(self):
        g = poly([(2, 0, 0), (1, 0, 0)], 1)  # x - 1
        code = build_code(P3, 1, 5, g)
        assert code.k == 4
        assert code.cardinality == 3**12

    def test_reference_parameters(self, reference_code):
        assert reference_code.k == 2
        assert reference_code.cardinality == 729

    def test_non_monic_rejected(self):
        g = poly([(1, 0, 0), (2, 0, 0)], 1)  # 2x + 1
        with pytest.raises(NonMonicGenerator):
            build_code(P3, 1, 4, g)

    def test_order_mismatch_rejected(self):
        g = poly([(2, 0, 0), (1, 0, 0)], 2)
        with pytest.raises(OrderMismatch):
            build_code(P3, 2, 3, g)

    def test_divisibility_checked_by_oracle(self):
        # g = x^2 + v: accept build_code's verdict only if it matches divmod
        g = poly([(0, 1, 0), (0, 0, 0), (1, 0, 0)], 2)
        _, r = x_pow_n_minus_1(4, 2, P3).right_divmod(g)
        if r.is_zero:
            build_code(P3, 2, 4, g)
        else:
            with pytest.raises(NotRightDivisor):
                build_code(P3, 2, 4, g)

    def test_reverification_deterministic(self, reference_code):
        g = reference_code.generator
        _, r = x_pow_n_minus_1(4, 2, P3).right_divmod(g)
        assert r.is_zero


class TestEncode:
    def test_zero_message(self, reference_code):
        m = SkewPolynomial.zero(2, P3)
        assert encode(reference_code, m).weight == 0

    def test_unit_message_gives_generator(self, reference_code):
        m = SkewPolynomial.one(2, P3)
        assert encode(reference_code, m) == word(
            [(1, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0)])

    def test_x_message(self, reference_code):
        m = poly([(0, 0, 0), (1, 0, 0)], 2)
        assert encode(reference_code, m) == word(
            [(0, 0, 0), (1, 0, 0), (0, 0, 0), (1, 0, 0)])

    def test_message_too_long(self, reference_code):
        m = poly([(0, 0, 0), (0, 0, 0), (1, 0, 0)], 2)
        with pytest.raises(MessageTooLong):
            encode(reference_code, m)


class TestMembership:
    def test_all_encodings_are_members(self, reference_code):
        for m in iter_messages(reference_code):
            assert is_member(reference_code, encode(reference_code, m))

    def test_shift_closure_exhaustive(self, reference_code):
        for m in iter_messages(reference_code):
            c = encode(reference_code, m)
            assert is_member(reference_code, theta_shift(c, 2))

    def test_constant_one_not_member(self, reference_code):
        c = word([(1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0)])
        assert not is_member(reference_code, c)

    def test_length_checked(self, reference_code):
        with pytest.raises(ValueError):
            is_member(reference_code, word([(0, 0, 0)]))

    def test_linearity_sampled(self, reference_code):
        rng = random.Random(13)
        words = [encode(reference_code, m) for m in iter_messages(reference_code)]
        for _ in range(300):
            c1, c2 = rng.choice(words), rng.choice(words)
            s = rng.choice(all_elements(P3))
            total = Codeword(tuple(a + b for a, b in zip(c1.entries, c2.entries)))
            scaled = Codeword(tuple(s * a for a in c1.entries))
            assert is_member(reference_code, total)
            assert is_member(reference_code, scaled)

    def test_cardinality_by_enumeration(self, reference_code):
        seen = {
            tuple(e.triple() for e in encode(reference_code, m).entries)
            for m in iter_messages(reference_code)
        }
        assert len(seen) == 729

    def test_identity_twist_gives_classical_cyclic_code(self):
        g = poly([(2, 0, 0), (1, 0, 0)], 1)  # x - 1
        code = build_code(P3, 1, 4, g)
        for m in iter_messages(code):
            c = encode(code, m)
            rotated = Codeword((c.entries[-1],) + c.entries[:-1])
            assert is_member(code, rotated)


class TestMinDistance:
    def test_full_rank_code_distance_one(self):
        code = build_code(P3, 1, 3, SkewPolynomial.one(1, P3))
        assert min_hamming_distance(code) == 1

    def test_reference_distance_pinned(self, reference_code):
        # regression value from the exhaustive 729-codeword scan
        assert min_hamming_distance(reference_code) == 2

    def test_budget_exceeded(self):
        pm = PrimeModulus(5)
        g = SkewPolynomial.from_triples([(4, 0, 0), (1, 0, 0)], 1, pm)  # x - 1
        code = build_code(pm, 1, 5, g)
        assert code.cardinality == 5**12
        with pytest.raises(BudgetExceeded):
            min_hamming_distance(code)
