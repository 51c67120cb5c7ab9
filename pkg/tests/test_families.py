"""
Unit tests for the built-in solution families
"""
from fractions import Fraction

import pytest

from src.config.constants import DEFAULT_CLEAR_CAP
from src.core.exceptions import (
    InconsistencyError,
    NotClearableError,
    PreconditionError,
    UnknownNameError,
    UnsupportedShapeError,
)
from src.core.families import (
    Direction,
    FamilySpec,
    ResidualTerm,
    SolutionTuple,
    builtin_families,
    check_shift_remark,
    clear_denominators,
    family_names,
    generate,
    generate_from_recurrence,
    generate_laurent,
    get_family,
    recurrence_values,
)
from src.core.oracle import verify_relation
from src.core.series import RationalFunction

TAYLOR_FAMILIES = [spec.name for spec in builtin_families() if spec.direction is Direction.TAYLOR]
LAURENT_FAMILIES = [spec.name for spec in builtin_families() if spec.direction is Direction.LAURENT]


def _row(t: SolutionTuple) -> tuple:
    """Entries followed by the residual base, as in the CSV output."""
    values = t.entries + ((t.residual,) if t.residual is not None else ())
    return tuple(values)


class TestRegistry:
    """Tests for the family registry"""

    def test_names(self):
        """Test eight Taylor families precede three Laurent ones"""
        assert family_names() == [
            "thm1.1",
            "thm2.4",
            "thm2.5",
            "thm2.6",
            "thm2.7",
            "thm2.8",
            "thm2.9",
            "thm2.10",
            "thm1.1-laurent",
            "thm2.5-laurent",
            "thm2.6-laurent",
        ]
        assert len(TAYLOR_FAMILIES) == 8
        assert len(LAURENT_FAMILIES) == 3

    def test_unknown_name(self):
        """Test an unknown family lists the valid names"""
        with pytest.raises(UnknownNameError) as exc_info:
            get_family("thm9.9")
        assert "thm2.5" in str(exc_info.value)

    def test_every_taylor_family_has_forms(self):
        """Test each Taylor family carries its recurrence substitution"""
        for name in TAYLOR_FAMILIES:
            spec = get_family(name)
            assert spec.recurrence is not None
            assert len(spec.forms) == len(spec.generators)

    def test_relation_template(self):
        """Test the symbolic relation of a residual family"""
        assert get_family("thm2.5").relation_template() == "a^3 + b^3 = c^3 + ((-9)^n)^3"
        assert get_family("thm2.8").relation_template() == "a^4 + b^4 + c^4 + d^4 = e^4 - (8*(-3)^n)^4"


class TestFamilySpecValidation:
    """Tests for FamilySpec construction"""

    def _generators(self, count):
        return tuple(RationalFunction.of((1, 2), (1, -2, -2, 1)) for _ in range(count))

    def test_rejects_exponent(self):
        """Test only cubes and fourth powers"""
        with pytest.raises(UnsupportedShapeError):
            FamilySpec("bad", 5, ("a", "b"), self._generators(2), (0,), (1,))

    def test_rejects_label_count(self):
        """Test one label per generator"""
        with pytest.raises(UnsupportedShapeError):
            FamilySpec("bad", 3, ("a",), self._generators(2), (0,), (1,))

    def test_rejects_partition(self):
        """Test lhs and rhs cover every entry exactly once"""
        with pytest.raises(UnsupportedShapeError):
            FamilySpec("bad", 3, ("a", "b", "c"), self._generators(3), (0, 1), (1,))

    def test_rejects_mixed_denominators(self):
        """Test generators must share one denominator"""
        generators = (RationalFunction.of((1,), (1, -1)), RationalFunction.of((1,), (1, 1)))
        with pytest.raises(UnsupportedShapeError):
            FamilySpec("bad", 3, ("a", "b"), generators, (0,), (1,))

    def test_residual_term_rejects_zero(self):
        """Test a residual needs a nonzero scale and ratio"""
        with pytest.raises(PreconditionError):
            ResidualTerm(0, 2)
        with pytest.raises(PreconditionError):
            ResidualTerm(1, 2, sign=0)


class TestTaylorFamilies:
    """Tests for generate on the Taylor families"""

    @pytest.mark.parametrize("name,rows", [
        ("thm1.1", [(1, 2, 2, 1), (135, 138, 172, -1), (11161, 11468, 14258, 1)]),
        ("thm2.4", [(1, 2, 2, 1), (-1, 10, 12, -9), (9, 12, 18, -15)]),
        ("thm2.5", [(2, 1, 2, 1), (108, 111, 138, -9)]),
        ("thm2.6", [(2, 1, 1, 2), (18, -15, 9, 12)]),
        ("thm2.7", [(8, 6, 14, 9, 4, 15), (24, -56, -32, 36, 16, 60)]),
        ("thm2.8", [(6, 14, 9, 4, 15, 8), (352, 328, 252, 112, 420, -24)]),
        ("thm2.9", [(4, 3, 2, 4, 2, 5), (-8, 12, -16, 16, 8, 20)]),
        ("thm2.10", [(4, 3, 4, 2, 5, 2), (132, 117, 156, 138, 195, -6)]),
    ])
    def test_first_tuples(self, name, rows):
        """Test the first tuples of each family"""
        tuples = generate(get_family(name), len(rows) - 1)
        assert [_row(t) for t in tuples] == rows

    def test_thm25_relation_string(self):
        """Test the printed relation keeps the signed residual"""
        t = generate(get_family("thm2.5"), 1)[1]
        assert t.relation_string() == "108^3 + 111^3 = 138^3 + (-9)^3"

    @pytest.mark.parametrize("name", TAYLOR_FAMILIES)
    def test_relations_hold(self, name):
        """Test every tuple up to n = 60 is integral and passes the independent check"""
        for t in generate(get_family(name), 60):
            assert t.is_integral
            assert verify_relation(t)

    @pytest.mark.parametrize("name", TAYLOR_FAMILIES)
    def test_recurrence_pipeline_agrees(self, name):
        """Test generating functions and recurrence iteration give the same tuples for n <= 200"""
        spec = get_family(name)
        assert generate(spec, 200) == generate_from_recurrence(spec, 200)

    @pytest.mark.parametrize("name", TAYLOR_FAMILIES)
    def test_forms_generate_the_family(self, name):
        """Test each generating function is the form_ogf of its quadratic form"""
        spec = get_family(name)
        for form, generator in zip(spec.forms, spec.generators):
            assert spec.recurrence.form_ogf(form).equivalent(generator)

    def test_recurrence_values(self):
        """Test a single index from the recurrence"""
        assert recurrence_values(get_family("thm1.1"), 1) == (135, 138, 172)

    def test_negative_n_max(self):
        """Test n_max must be nonnegative"""
        with pytest.raises(PreconditionError):
            generate(get_family("thm1.1"), -1)

    def test_shift_remark(self):
        """Test d(n) = -a(n+1) in the Fibonacci cube family"""
        assert check_shift_remark(100)

    def test_laurent_only_entry_point(self):
        """Test generate_laurent refuses a Taylor family"""
        with pytest.raises(UnsupportedShapeError):
            generate_laurent(get_family("thm2.4"), 3)

    def test_laurent_family_has_no_recurrence_pipeline(self):
        """Test the recurrence pipeline needs quadratic forms"""
        with pytest.raises(UnsupportedShapeError):
            generate_from_recurrence(get_family("thm2.5-laurent"), 3)


class TestLaurentFamilies:
    """Tests for the expansions at infinity"""

    def test_thm11_laurent_is_integral(self):
        """Test the palindromic denominator gives integers directly"""
        tuples = generate(get_family("thm1.1-laurent"), 1)
        assert _row(tuples[0]) == (9, -12, -10, 1)
        assert tuples[1].entries[0] == 791
        assert all(t.is_integral for t in tuples)

    def test_thm25_laurent_first(self):
        """Test alpha(0) = -10/81 with residual -1/9"""
        t = generate(get_family("thm2.5-laurent"), 0)[0]
        assert t.entries == (Fraction(-10, 81), Fraction(1, 81), Fraction(-12, 81))
        assert t.residual == Fraction(-1, 9)
        assert t.residual_sign == -1
        assert not t.is_integral

    @pytest.mark.parametrize("name", LAURENT_FAMILIES)
    def test_relations_hold(self, name):
        """Test every rational tuple up to n = 50"""
        tuples = generate(get_family(name), 50)
        assert len(tuples) == 51
        assert all(verify_relation(t) for t in tuples)


class TestClearDenominators:
    """Tests for clear_denominators"""

    def test_thm25_base_9(self):
        """Test 81 clears the first Laurent tuple"""
        t = generate(get_family("thm2.5-laurent"), 0)[0]
        cleared = clear_denominators(t, 9)
        assert _row(cleared) == (-10, 1, -12, -9)
        assert cleared.is_integral

    def test_thm26_base_6(self):
        """Test 36 clears the first Laurent tuple"""
        t = generate(get_family("thm2.6-laurent"), 0)[0]
        assert _row(clear_denominators(t, 6)) == (-10, 1, 9, 12)

    def test_cleared_tuples_hold(self):
        """Test cleared tuples are integral and still satisfy the relation"""
        spec = get_family("thm2.5-laurent")
        for t in generate(spec, 30):
            cleared = clear_denominators(t, spec.clear_base)
            assert cleared.is_integral
            assert verify_relation(cleared)

    @pytest.mark.parametrize("name", ["thm2.5-laurent", "thm2.6-laurent"])
    def test_default_cap_reaches_n_50(self, name):
        """Test tuples past n = 31 clear with the default cap and the least power"""
        spec = get_family(name)
        for t in generate(spec, 50)[31:]:
            cleared = clear_denominators(t, spec.clear_base)
            assert cleared.is_integral
            assert verify_relation(cleared)
            assert not cleared.scaled(Fraction(1, spec.clear_base)).is_integral

    def test_prime_power_base(self):
        """Test base 3 reaches the same least multiple 81 as base 9"""
        t = generate(get_family("thm2.5-laurent"), 0)[0]
        assert clear_denominators(t, 3) == clear_denominators(t, 9)

    def test_default_cap(self):
        """Test the default cap admits the exponent 102 that n = 50 needs"""
        assert DEFAULT_CLEAR_CAP >= 102

    def test_integral_tuple_unchanged(self):
        """Test the least power may be 9^0"""
        t = generate(get_family("thm1.1"), 2)[2]
        assert clear_denominators(t, 9) == t

    def test_cap_exceeded(self):
        """Test a cap below the needed power"""
        t = generate(get_family("thm2.5-laurent"), 0)[0]
        with pytest.raises(NotClearableError):
            clear_denominators(t, 9, cap=1)

    def test_wrong_base(self):
        """Test powers of 2 never clear a denominator of 81"""
        t = generate(get_family("thm2.5-laurent"), 0)[0]
        with pytest.raises(NotClearableError):
            clear_denominators(t, 2)

    def test_base_must_exceed_one(self):
        """Test base 1 is a precondition error"""
        t = generate(get_family("thm2.5-laurent"), 0)[0]
        with pytest.raises(PreconditionError):
            clear_denominators(t, 1)


class TestSolutionTuple:
    """Tests for SolutionTuple"""

    def test_rejects_false_relation(self):
        """Test construction verifies the relation"""
        with pytest.raises(InconsistencyError):
            SolutionTuple(0, (1, 2, 3), 3, (0, 1), (2,))

    def test_taxicab_pair(self):
        """Test 1^3 + 12^3 = 9^3 + 10^3"""
        t = SolutionTuple(0, (1, 12, 9, 10), 3, (0, 1), (2, 3))
        assert t.is_integral
        assert t.relation_string() == "1^3 + 12^3 = 9^3 + 10^3"

    def test_scaled(self):
        """Test scaling keeps the relation and scales the residual"""
        t = generate(get_family("thm2.8"), 1)[1]
        doubled = t.scaled(2)
        assert doubled.entries == tuple(2 * x for x in t.entries)
        assert doubled.residual == 2 * t.residual
        assert doubled.holds()

    def test_rational_entries_print_in_parentheses(self):
        """Test rational entries are bracketed before the power"""
        t = SolutionTuple(0, (Fraction(1, 2), Fraction(1, 2)), 3, (0,), (1,))
        assert t.relation_string() == "(1/2)^3 = (1/2)^3"
        assert not t.is_integral
