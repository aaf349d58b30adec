"""Closed-form quadratic roots, metallic means, integer mean detection."""

import random
from fractions import Fraction

import pytest

from goldmean import (
    NoRealRoots,
    QuadraticSpec,
    QuadraticSurd,
    generalized_gm,
    integer_metallic,
    metallic_mean,
    solve_quadratic,
    to_decimal,
)
from oracles import sqrt_decimal_string


class TestSolveQuadratic:
    def test_golden_case(self):
        pair = solve_quadratic(QuadraticSpec(1, Fraction(1), "plus"))
        assert pair.x1 == QuadraticSurd(Fraction(-1, 2), Fraction(1, 2), 5)
        assert pair.x2 == QuadraticSurd(Fraction(-1, 2), Fraction(-1, 2), 5)
        assert pair.discriminant == 5

    def test_half_q_case(self):
        pair = solve_quadratic(QuadraticSpec(1, Fraction(1, 2), "plus"))
        assert to_decimal(pair.x1, 7) == "0.3660254"
        assert to_decimal(pair.x2, 7) == "-1.3660254"

    def test_double_root(self):
        pair = solve_quadratic(QuadraticSpec(2, Fraction(-1), "minus"))
        assert pair.x1 == pair.x2 == 1
        assert pair.discriminant == 0

    def test_no_real_roots(self):
        with pytest.raises(NoRealRoots):
            solve_quadratic(QuadraticSpec(1, Fraction(-1), "plus"))

    def test_x1_is_larger(self):
        rnd = random.Random(5)
        for _ in range(100):
            spec = QuadraticSpec(rnd.randint(1, 9), Fraction(rnd.randint(0, 30), 2),
                                 rnd.choice(["plus", "minus"]))
            pair = solve_quadratic(spec)
            assert pair.x1 >= pair.x2

    def test_vieta_randomized(self):
        rnd = random.Random(11)
        for _ in range(100):
            sign_name = rnd.choice(["plus", "minus"])
            spec = QuadraticSpec(rnd.randint(1, 10), Fraction(rnd.randint(0, 50), 2), sign_name)
            pair = solve_quadratic(spec)
            s = 1 if sign_name == "plus" else -1
            assert pair.x1 + pair.x2 == -s * spec.p
            assert pair.x1 * pair.x2 == -spec.q

    def test_p_must_be_positive(self):
        with pytest.raises(ValueError):
            QuadraticSpec(0, Fraction(1))


class TestGeneralizedGm:
    def test_m2_is_the_golden_mean(self):
        pair = generalized_gm(2)
        assert pair.x1 == QuadraticSurd(Fraction(-1, 2), Fraction(1, 2), 5)
        assert to_decimal(pair.x1, 7) == "0.6180339"
        assert pair.discriminant == 5  # = 2m + 1

    def test_m3_per_sqrt7(self):
        pair = generalized_gm(3)
        assert pair.x1 == QuadraticSurd(Fraction(-1, 2), Fraction(1, 2), 7)
        assert to_decimal(pair.x1, 7) == "0.8228756"

    def test_m0(self):
        pair = generalized_gm(0)
        assert pair.x1 == 0 and pair.x2 == -1

    def test_discriminant_is_odd_radicand(self):
        for m in range(0, 30):
            assert generalized_gm(m).discriminant == 2 * m + 1

    def test_cathetus_identity(self):
        for m in range(1, 51):
            pair = generalized_gm(m)
            assert abs(pair.x1) + abs(pair.x2) == QuadraticSurd.sqrt(2 * m + 1)
            assert (abs(pair.x1) + abs(pair.x2)) ** 2 == 2 * m + 1
            assert pair.x1 ** 2 + pair.x2 ** 2 == m + 1

    def test_negative_m_rejected(self):
        with pytest.raises(ValueError):
            generalized_gm(-1)


class TestMetallicMean:
    def test_golden(self):
        assert metallic_mean(1, 1) == QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5)

    def test_silver_thirty_digits(self):
        silver = metallic_mean(2, 1)
        assert silver == QuadraticSurd(1, 1, 2)
        assert to_decimal(silver, 30) == sqrt_decimal_string(1, 2, 30)

    def test_copper_is_two(self):
        assert metallic_mean(1, 2) == 2

    def test_defining_identity(self):
        for p in range(1, 8):
            for q in range(0, 8):
                x = metallic_mean(p, q)
                assert x ** 2 == p * x + q

    def test_negative_q_rejected(self):
        with pytest.raises(ValueError):
            metallic_mean(1, -1)


class TestIntegerMetallic:
    def test_examples(self):
        assert integer_metallic(2) == (1, 2)
        assert integer_metallic(20) == (4, 5)
        assert integer_metallic(5) is None

    def test_k_scan(self):
        for k in range(0, 51):
            q = k * (k + 1)
            assert integer_metallic(q) == (k, k + 1)
            assert integer_metallic(q + 1) is None

    def test_pair_matches_root_magnitudes(self):
        for k in range(0, 20):
            q = k * (k + 1)
            pair = solve_quadratic(QuadraticSpec(1, Fraction(q), "minus"))
            assert pair.x1 == k + 1 and pair.x2 == -k
            assert integer_metallic(q) == (k, k + 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            integer_metallic(-3)
