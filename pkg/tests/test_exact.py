"""
Unit tests for exact arithmetic
"""
from fractions import Fraction

import pytest

from src.core.exact import (
    RadicalScalar,
    format_rational,
    parse_integer,
    parse_rational,
    radical_mul,
    rational_normalize,
    sqrt_of_rational,
    squarefree_decomposition,
)
from src.core.exceptions import (
    ParseError,
    PreconditionError,
    UndefinedRationalError,
    UnsupportedTowerError,
)


class TestRationalNormalize:
    """Tests for rational_normalize"""

    def test_gcd_reduction(self):
        """Test 2/4 reduces to 1/2"""
        assert rational_normalize(2, 4) == Fraction(1, 2)

    def test_sign_moves_to_numerator(self):
        """Test 3/-9 becomes -1/3"""
        value = rational_normalize(3, -9)
        assert value == Fraction(-1, 3)
        assert value.denominator == 3

    def test_already_reduced(self):
        """Test -10/81 is kept as is"""
        value = rational_normalize(-10, 81)
        assert (value.numerator, value.denominator) == (-10, 81)

    def test_zero_denominator(self):
        """Test zero denominator is an undefined rational"""
        with pytest.raises(UndefinedRationalError):
            rational_normalize(1, 0)

    def test_undefined_rational_is_zero_division(self):
        """Test the error also reads as a ZeroDivisionError"""
        with pytest.raises(ZeroDivisionError):
            rational_normalize(5, 0)

    def test_normalization_is_idempotent(self, random_fraction):
        """Test normalizing a normalized rational is the identity"""
        for _ in range(50):
            q = random_fraction()
            again = rational_normalize(q.numerator, q.denominator)
            assert (again.numerator, again.denominator) == (q.numerator, q.denominator)


class TestParsing:
    """Tests for the decimal and num/den wire format"""

    @pytest.mark.parametrize("text,expected", [
        ("7", 7),
        ("-12", -12),
        ("+3", 3),
        (" 65601 ", 65601),
    ])
    def test_parse_integer(self, text, expected):
        """Test integer literals"""
        assert parse_integer(text) == expected

    @pytest.mark.parametrize("text", ["1e3", "1.0", "", "x", "3/4"])
    def test_parse_integer_rejects(self, text):
        """Test non-integer literals are parse errors"""
        with pytest.raises(ParseError):
            parse_integer(text)

    @pytest.mark.parametrize("text,expected", [
        ("-10/81", Fraction(-10, 81)),
        ("2/4", Fraction(1, 2)),
        ("-3/9", Fraction(-1, 3)),
        ("5", Fraction(5)),
    ])
    def test_parse_rational(self, text, expected):
        """Test rational literals are canonicalised"""
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["3/-9", "1/2/3", "0.5", "a/b"])
    def test_parse_rational_rejects(self, text):
        """Test malformed rational literals"""
        with pytest.raises(ParseError):
            parse_rational(text)

    def test_parse_rational_zero_denominator(self):
        """Test n/0 is undefined rather than malformed"""
        with pytest.raises(UndefinedRationalError):
            parse_rational("1/0")

    def test_format_rational(self):
        """Test integers print bare and rationals as num/den"""
        assert format_rational(Fraction(-10, 81)) == "-10/81"
        assert format_rational(Fraction(12, 4)) == "3"
        assert format_rational(-7) == "-7"

    def test_format_parse_agree(self, random_fraction):
        """Test printed rationals parse back to the same value"""
        for _ in range(50):
            q = random_fraction(1000)
            assert parse_rational(format_rational(q)) == q


class TestSquarefreeDecomposition:
    """Tests for squarefree_decomposition"""

    @pytest.mark.parametrize("n,expected", [
        (12, (2, 3)),
        (-8, (2, -2)),
        (-1, (1, -1)),
        (1, (1, 1)),
        (72, (6, 2)),
        (49, (7, 1)),
        (30, (1, 30)),
    ])
    def test_decomposition(self, n, expected):
        """Test n = f^2 * d with d squarefree and signed"""
        assert squarefree_decomposition(n) == expected

    def test_zero(self):
        """Test zero has no decomposition"""
        with pytest.raises(PreconditionError):
            squarefree_decomposition(0)

    def test_reconstructs(self, fake):
        """Test f^2 * d gives back n"""
        for _ in range(100):
            n = fake.random_int(-100000, 100000) or 1
            f, d = squarefree_decomposition(n)
            assert f * f * d == n
            assert f > 0

    def test_large_prime_factors(self):
        """Test numbers built from Mersenne primes split without trial division"""
        m61, m89 = 2 ** 61 - 1, 2 ** 89 - 1
        assert squarefree_decomposition(m61 ** 2 * m89) == (m61, m89)
        assert squarefree_decomposition(-m61 * m89) == (1, -m61 * m89)


class TestRadicalScalarConstruction:
    """Tests for RadicalScalar invariants"""

    def test_rejects_square_radicand(self):
        """Test radicands must be squarefree"""
        with pytest.raises(PreconditionError):
            RadicalScalar((4,), (0, 1))

    @pytest.mark.parametrize("radicand", [0, 1])
    def test_rejects_trivial_radicand(self, radicand):
        """Test 0 and 1 are not radicands"""
        with pytest.raises(PreconditionError):
            RadicalScalar((radicand,), (0, 1))

    def test_rejects_unsorted_radicands(self):
        """Test radicands are distinct and sorted"""
        with pytest.raises(PreconditionError):
            RadicalScalar((3, 2), (0, 1, 1, 0))

    def test_rejects_component_count(self):
        """Test 2^k components are required"""
        with pytest.raises(PreconditionError):
            RadicalScalar((2,), (1, 2, 3))

    def test_rejects_fourth_radicand(self):
        """Test the tower holds at most three radicands"""
        with pytest.raises(UnsupportedTowerError):
            RadicalScalar((2, 3, 5, 7), (0,) * 16)

    def test_compacts_unused_radicands(self):
        """Test radicands with zero coefficients are dropped"""
        value = RadicalScalar((2, 3), (1, 0, 5, 0))
        assert value.radicands == (3,)
        assert value.components == (Fraction(1), Fraction(5))

    def test_compacts_to_rational(self):
        """Test a value with no radical part has no radicands"""
        value = RadicalScalar((2,), (Fraction(3, 2), 0))
        assert value.is_rational()
        assert value.to_fraction() == Fraction(3, 2)

    def test_zero_iff_all_components_zero(self):
        """Test zero testing is componentwise"""
        assert RadicalScalar((2, 3), (0, 0, 0, 0)).is_zero()
        assert not RadicalScalar((2, 3), (0, 0, 0, 1)).is_zero()
        assert RadicalScalar.sqrt(5)

    def test_negative_radicand_allowed(self):
        """Test formal square roots of negative integers"""
        i = RadicalScalar.sqrt(-1)
        assert i * i == -1
        r = RadicalScalar.sqrt(-3)
        assert r * r == -3

    def test_to_fraction_irrational(self):
        """Test irrational values do not convert"""
        with pytest.raises(PreconditionError):
            RadicalScalar.sqrt(2).to_fraction()

    def test_str(self):
        """Test the human-readable form"""
        value = 1 + sqrt_of_rational(Fraction(4, 3))
        assert str(value) == "1 + 2/3*sqrt(3)"
        assert str(-RadicalScalar.sqrt(2)) == "-sqrt(2)"
        assert str(RadicalScalar.zero()) == "0"

    def test_equal_values_hash_equal(self):
        """Test compacted and fresh rationals are interchangeable"""
        compacted = RadicalScalar((2,), (1, 0))
        assert compacted == RadicalScalar.one()
        assert hash(compacted) == hash(RadicalScalar.one())
        assert len({compacted, RadicalScalar.one(), RadicalScalar.rational(1)}) == 1

    @pytest.mark.parametrize("value", [0, 3, -7, Fraction(2, 5), Fraction(-9, 4)])
    def test_rational_hash_matches_python_numbers(self, value):
        """Test a rational RadicalScalar hashes like the number it equals"""
        scalar = RadicalScalar.rational(value)
        assert scalar == value
        assert hash(scalar) == hash(value)
        assert value in {scalar}
        assert {value: "x"}[scalar] == "x"


class TestSqrtOfRational:
    """Tests for sqrt_of_rational"""

    def test_rational_square(self):
        """Test 2/8 has the rational root 1/2"""
        root = sqrt_of_rational(Fraction(2, 8))
        assert root.is_rational()
        assert root.to_fraction() == Fraction(1, 2)

    def test_one(self):
        """Test sqrt(1) = 1"""
        assert sqrt_of_rational(1) == 1

    def test_four_thirds(self):
        """Test sqrt(4/3) is stored as (2/3)*sqrt(3)"""
        root = sqrt_of_rational(Fraction(4, 3))
        assert root.radicands == (3,)
        assert root.components == (Fraction(0), Fraction(2, 3))

    def test_zero(self):
        """Test zero maps to zero, not an error"""
        root = sqrt_of_rational(0)
        assert root.is_zero()
        assert root.radicands == ()

    def test_negative(self):
        """Test a negative rational gets a negative radicand"""
        root = sqrt_of_rational(Fraction(-1, 3))
        assert root.radicands == (-3,)
        assert root * root == Fraction(-1, 3)

    def test_large_numerator_and_denominator(self):
        """Test 9*M61 / (4*M89) has root (3/(2*M89))*sqrt(M61*M89)"""
        m61, m89 = 2 ** 61 - 1, 2 ** 89 - 1
        q = Fraction(9 * m61, 4 * m89)
        root = sqrt_of_rational(q)
        assert root.radicands == (m61 * m89,)
        assert root.components == (Fraction(0), Fraction(3, 2 * m89))
        assert root * root == q

    def test_square_property(self, random_fraction):
        """Test sqrt_of_rational(q)^2 == q over random rationals"""
        for _ in range(200):
            q = random_fraction(500)
            if q == 0:
                continue
            root = sqrt_of_rational(q)
            assert root * root == q
            assert root ** 2 == q


class TestRadicalArithmetic:
    """Tests for radical_mul and the ring operations"""

    def test_folding_rule(self):
        """Test sqrt(3) * sqrt(3) = 3"""
        s = RadicalScalar.sqrt(3)
        product = radical_mul(s, s)
        assert product.is_rational()
        assert product == 3

    def test_difference_of_squares(self):
        """Test (1 + sqrt 3)(1 - sqrt 3) = -2"""
        s = RadicalScalar.sqrt(3)
        assert radical_mul(1 + s, 1 - s) == -2

    def test_componentwise_expansion(self):
        """Test ((2/3)sqrt 3)((-3/2)sqrt 3) = -3"""
        left = RadicalScalar.sqrt(3) * Fraction(2, 3)
        right = RadicalScalar.sqrt(3) * Fraction(-3, 2)
        assert radical_mul(left, right) == -3

    def test_mixed_tower(self):
        """Test sqrt 2 * sqrt 3 lives in the tower (2, 3)"""
        product = RadicalScalar.sqrt(2) * RadicalScalar.sqrt(3)
        assert product.radicands == (2, 3)
        assert product.components == (0, 0, 0, 1)
        assert product * product == 6

    def test_too_many_radicands(self):
        """Test a fourth radicand is an unsupported tower"""
        value = RadicalScalar.sqrt(2) * RadicalScalar.sqrt(3) * RadicalScalar.sqrt(5)
        assert len(value.radicands) == 3
        with pytest.raises(UnsupportedTowerError):
            radical_mul(value, RadicalScalar.sqrt(7))
        with pytest.raises(UnsupportedTowerError):
            value + RadicalScalar.sqrt(7)

    def test_division(self):
        """Test division by a rational"""
        value = RadicalScalar.sqrt(5) * 3
        assert value / 3 == RadicalScalar.sqrt(5)
        with pytest.raises(UndefinedRationalError):
            value / 0

    def test_power(self):
        """Test repeated squaring"""
        s = RadicalScalar.sqrt(2)
        assert s ** 0 == 1
        assert s ** 3 == s * 2
        assert (1 + s) ** 2 == 3 + 2 * s

    def _random_scalar(self, random_fraction, tower):
        return RadicalScalar(tower, tuple(random_fraction(9) for _ in range(1 << len(tower))))

    def test_ring_axioms(self, random_fraction):
        """Test associativity, commutativity and distributivity in a shared tower"""
        tower = (-1, 2, 3)
        for _ in range(25):
            x, y, z = (self._random_scalar(random_fraction, tower) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert (x * y) * z == x * (y * z)
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z
            assert (x + y) - y == x
            assert x - x == 0

    def test_rational_field_laws(self, random_fraction):
        """Test rational inverses through the radical type"""
        for _ in range(50):
            q = random_fraction()
            if q == 0:
                continue
            assert RadicalScalar.rational(q) * (1 / q) == 1
