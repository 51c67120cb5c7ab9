"""
Unit tests for order-2 recurrences and their quadratic generating functions
"""
import pytest

from src.core.recurrences import (
    FIBONACCI,
    LinearRecurrence2,
    casoratian,
    cross_ogf,
    quadratic_values,
    recurrence_pair,
    square_ogf,
    term,
)
from src.core.series import Polynomial, RationalFunction

THM25 = LinearRecurrence2.from_shifts(9, -7)
THM26 = LinearRecurrence2.from_shifts(-6, 2)
THM28 = LinearRecurrence2.from_shifts(3, -5)
THM210 = LinearRecurrence2(6, 3)

FAMILY_RECURRENCES = [FIBONACCI, THM25, THM26, THM28, THM210]


class TestLinearRecurrence2:
    """Tests for construction and terms"""

    def test_from_shifts(self):
        """Test w(n+2) = 9w(n) - 7w(n+1) is c1 = -7, c2 = 9"""
        assert (THM25.c1, THM25.c2, THM25.w0, THM25.w1) == (-7, 9, 0, 1)

    def test_name_does_not_affect_equality(self):
        """Test recurrences compare by coefficients and initial values"""
        assert LinearRecurrence2(1, 1) == FIBONACCI
        assert LinearRecurrence2(1, 1, 2, 1) != FIBONACCI

    def test_fibonacci(self, fibonacci):
        """Test Fibonacci term 6 is 8"""
        assert term(fibonacci, 6) == 8
        assert fibonacci.terms(8) == [0, 1, 1, 2, 3, 5, 8, 13]

    @pytest.mark.parametrize("n,expected", [(0, 0), (1, 1), (2, -7), (3, 58)])
    def test_thm25_terms(self, n, expected):
        """Test the first terms of w(n+2) = 9w(n) - 7w(n+1)"""
        assert term(THM25, n) == expected

    def test_terms_agree_with_term(self):
        """Test list and single-term evaluation agree"""
        for rec in FAMILY_RECURRENCES:
            values = rec.terms(30)
            assert [rec.term(n) for n in range(30)] == values

    def test_recurrence_pair(self, fibonacci):
        """Test (w(n+1), w(n))"""
        assert recurrence_pair(fibonacci, 3) == (3, 2)

    def test_str(self):
        """Test the human-readable form"""
        assert str(LinearRecurrence2(2, -6)) == "w(n+2) = 2*w(n+1) + -6*w(n), w(0) = 0, w(1) = 1"
        assert str(FIBONACCI).startswith("fibonacci: ")


class TestCasoratian:
    """Tests for the Casoratian w(n+1)^2 - w(n)w(n+2)"""

    def test_thm25_start(self):
        """Test (-9)^n at n = 0 and n = 1"""
        assert casoratian(THM25, 0) == 1
        assert casoratian(THM25, 1) == -9

    def test_scaled(self):
        """Test the Thm 2.8 recurrence scaled by 8 starts at 8"""
        assert casoratian(THM28, 0, scale=8) == 8
        assert casoratian(THM28, 3, scale=8) == 8 * (-3) ** 3

    def test_geometric_law(self):
        """Test casoratian(n) = -c2 * casoratian(n-1) for n <= 100"""
        for rec in FAMILY_RECURRENCES:
            previous = rec.casoratian(0)
            for n in range(1, 101):
                current = rec.casoratian(n)
                assert current == -rec.c2 * previous
                previous = current

    def test_closed_form(self, fake):
        """Test the closed form for random recurrences and initial values"""
        for _ in range(30):
            rec = LinearRecurrence2(
                fake.random_int(-9, 9), fake.random_int(-9, 9), fake.random_int(-5, 5), fake.random_int(-5, 5)
            )
            for n in range(12):
                assert rec.casoratian(n) == rec.casoratian_closed_form(n)


class TestQuadraticGeneratingFunctions:
    """Tests for square_ogf, cross_ogf and form_ogf"""

    def test_fibonacci_square(self):
        """Test (x - x^2)/(1 - 2x - 2x^2 + x^3)"""
        assert square_ogf(FIBONACCI) == RationalFunction.of((0, 1, -1), (1, -2, -2, 1))

    def test_fibonacci_cross(self):
        """Test x/(1 - 2x - 2x^2 + x^3)"""
        assert cross_ogf(FIBONACCI) == RationalFunction.of((0, 1), (1, -2, -2, 1))

    def test_thm25(self):
        """Test the Thm 2.5 square and cross generating functions"""
        den = (1, -58, -522, 729)
        assert square_ogf(THM25) == RationalFunction.of((0, 1, -9), den)
        assert cross_ogf(THM25) == RationalFunction.of((0, -7), den)

    def test_thm26_square(self):
        """Test (x + 6x^2)/(1 + 2x - 12x^2 - 216x^3)"""
        assert square_ogf(THM26) == RationalFunction.of((0, 1, 6), (1, 2, -12, -216))

    def test_thm28_cross(self):
        """Test -5x/(1 - 28x - 84x^2 + 27x^3)"""
        assert cross_ogf(THM28) == RationalFunction.of((0, -5), (1, -28, -84, 27))

    @pytest.mark.parametrize("rec,denominator", [
        (FIBONACCI, (1, -2, -2, 1)),
        (THM25, (1, -58, -522, 729)),
        (THM26, (1, 2, -12, -216)),
        (THM28, (1, -28, -84, 27)),
        (THM210, (1, -39, -117, 27)),
    ])
    def test_denominators(self, rec, denominator):
        """Test the shared denominators of the five recurrences"""
        assert rec.symmetric_denominator() == Polynomial.of(*denominator)
        assert square_ogf(rec).denominator == Polynomial.of(*denominator)

    def test_expansions_match_iteration(self):
        """Test Taylor coefficients equal w(n)^2 and w(n)w(n+1) for n <= 200"""
        for rec in FAMILY_RECURRENCES:
            w = rec.terms(202)
            assert square_ogf(rec).taylor_coeffs(201) == [x * x for x in w[:201]]
            assert cross_ogf(rec).taylor_coeffs(201) == [w[n] * w[n + 1] for n in range(201)]

    def test_form_ogf(self, fake):
        """Test generating functions of random quadratic forms in (w(n+1), w(n))"""
        for rec in FAMILY_RECURRENCES:
            coefficients = tuple(fake.random_int(-12, 12) for _ in range(3))
            expected = quadratic_values(rec, coefficients, 40)
            assert rec.form_ogf(coefficients).taylor_coeffs(40) == expected

    def test_nonstandard_initial_values(self):
        """Test the construction does not assume w(0) = 0, w(1) = 1"""
        lucas = LinearRecurrence2(1, 1, 2, 1)
        w = lucas.terms(31)
        assert lucas.square_ogf().taylor_coeffs(30) == [x * x for x in w[:30]]
        assert lucas.cross_ogf().taylor_coeffs(30) == [w[n] * w[n + 1] for n in range(30)]
