"""
Infinite solution families.

A FamilySpec binds a set of rational generating functions (one per tuple
entry), a power relation and an optional residual term. Taylor families
expand at x = 0 and give integer tuples; Laurent families expand at
infinity and give rational tuples that clear_denominators turns into
integers. Every tuple is checked on construction.

Each Taylor family also carries the quadratic forms in (A, B) =
(w_{n+1}, w_n) of its recurrence, so the same integers can be produced a
second way by iterating the recurrence.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import factorint

from src.config.constants import DEFAULT_CLEAR_CAP, MSG_FAMILY_GENERATED
from src.core.exact import RationalLike, format_rational
from src.core.exceptions import (
    InconsistencyError,
    NotClearableError,
    PreconditionError,
    UnknownNameError,
    UnsupportedShapeError,
)
from src.core.recurrences import FIBONACCI, LinearRecurrence2, recurrence_pair
from src.core.series import Polynomial, RationalFunction
from src.utils.logging import get_logger

logger = get_logger("families")


class Direction(str, Enum):
    """Expansion point of a family's generating functions"""
    TAYLOR = "taylor"
    LAURENT = "laurent"


@dataclass(frozen=True)
class ResidualTerm:
    """The residual base sign * (scale * ratio**(n + offset)), raised to the family exponent."""

    scale: Fraction
    ratio: Fraction
    offset: int = 0
    sign: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "scale", Fraction(self.scale))
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if self.scale == 0 or self.ratio == 0:
            raise PreconditionError("residual scale and ratio must be nonzero")
        if self.sign not in (1, -1):
            raise PreconditionError(f"residual sign must be +1 or -1, got {self.sign}")

    def value(self, n: int) -> Fraction:
        return self.scale * self.ratio ** (n + self.offset)

    def describe(self, exponent: int) -> str:
        ratio = format_rational(self.ratio)
        if self.ratio < 0 or self.ratio.denominator != 1:
            ratio = f"({ratio})"
        base = f"{ratio}^(n+{self.offset})" if self.offset else f"{ratio}^n"
        if self.scale != 1:
            base = f"{format_rational(self.scale)}*{base}"
        return f"{'+' if self.sign > 0 else '-'} ({base})^{exponent}"


@dataclass(frozen=True)
class FamilySpec:
    """A family of tuples given by generating functions sharing one denominator."""

    name: str
    exponent: int
    labels: Tuple[str, ...]
    generators: Tuple[RationalFunction, ...]
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]
    residual: Optional[ResidualTerm] = None
    direction: Direction = Direction.TAYLOR
    recurrence: Optional[LinearRecurrence2] = None
    forms: Optional[Tuple[Tuple[int, int, int], ...]] = None
    clear_base: Optional[int] = None
    description: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.exponent not in (3, 4):
            raise UnsupportedShapeError(f"{self.name}: exponent must be 3 or 4")
        if len(self.labels) != len(self.generators):
            raise UnsupportedShapeError(f"{self.name}: {len(self.labels)} labels for {len(self.generators)} generators")
        if sorted(self.lhs + self.rhs) != list(range(len(self.generators))):
            raise UnsupportedShapeError(f"{self.name}: lhs and rhs must partition the entries")
        denominators = {g.denominator for g in self.generators}
        if len(denominators) != 1:
            raise UnsupportedShapeError(f"{self.name}: generators do not share one denominator")
        if self.recurrence is not None and self.recurrence.symmetric_denominator() != self.denominator:
            raise UnsupportedShapeError(
                f"{self.name}: denominator {self.denominator} differs from the recurrence's "
                f"{self.recurrence.symmetric_denominator()}"
            )
        if self.forms is not None and len(self.forms) != len(self.generators):
            raise UnsupportedShapeError(f"{self.name}: one quadratic form per entry expected")

    @property
    def denominator(self) -> Polynomial:
        return self.generators[0].denominator

    def relation_template(self) -> str:
        left = " + ".join(f"{self.labels[i]}^{self.exponent}" for i in self.lhs)
        right = " + ".join(f"{self.labels[j]}^{self.exponent}" for j in self.rhs)
        residual = f" {self.residual.describe(self.exponent)}" if self.residual else ""
        return f"{left} = {right}{residual}"


def _power_text(value: Fraction, exponent: int) -> str:
    text = format_rational(value)
    if value < 0 or value.denominator != 1:
        text = f"({text})"
    return f"{text}^{exponent}"


@dataclass(frozen=True)
class SolutionTuple:
    """
    A verified tuple: sum(entries[lhs]**e) = sum(entries[rhs]**e) + sign*residual**e.

    Construction fails with InconsistencyError if the relation does not hold.
    """

    index: int
    entries: Tuple[Fraction, ...]
    exponent: int
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]
    residual: Optional[Fraction] = None
    residual_sign: int = 1
    family: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if self.residual is not None:
            object.__setattr__(self, "residual", Fraction(self.residual))
        if not self.holds():
            raise InconsistencyError(f"{self.family or 'tuple'} n={self.index}: {self.relation_string()} is false")

    def lhs_total(self) -> Fraction:
        return sum((self.entries[i] ** self.exponent for i in self.lhs), Fraction(0))

    def rhs_total(self) -> Fraction:
        total = sum((self.entries[j] ** self.exponent for j in self.rhs), Fraction(0))
        if self.residual is not None:
            total += self.residual_sign * self.residual ** self.exponent
        return total

    def holds(self) -> bool:
        return self.lhs_total() == self.rhs_total()

    @property
    def is_integral(self) -> bool:
        values = self.entries + ((self.residual,) if self.residual is not None else ())
        return all(x.denominator == 1 for x in values)

    def scaled(self, factor: RationalLike) -> "SolutionTuple":
        """All entries and the residual multiplied by factor; the relation is homogeneous."""
        factor = Fraction(factor)
        return SolutionTuple(
            index=self.index,
            entries=tuple(x * factor for x in self.entries),
            exponent=self.exponent,
            lhs=self.lhs,
            rhs=self.rhs,
            residual=None if self.residual is None else self.residual * factor,
            residual_sign=self.residual_sign,
            family=self.family,
        )

    def relation_string(self) -> str:
        left = " + ".join(_power_text(self.entries[i], self.exponent) for i in self.lhs)
        right = " + ".join(_power_text(self.entries[j], self.exponent) for j in self.rhs)
        if self.residual is not None:
            operator = "+" if self.residual_sign > 0 else "-"
            right = f"{right} {operator} {_power_text(self.residual, self.exponent)}"
        return f"{left} = {right}"


def _solution(spec: FamilySpec, n: int, entries: Sequence[Fraction]) -> SolutionTuple:
    residual = spec.residual.value(n) if spec.residual else None
    return SolutionTuple(
        index=n,
        entries=tuple(entries),
        exponent=spec.exponent,
        lhs=spec.lhs,
        rhs=spec.rhs,
        residual=residual,
        residual_sign=spec.residual.sign if spec.residual else 1,
        family=spec.name,
    )


def generate(spec: FamilySpec, n_max: int) -> List[SolutionTuple]:
    """
    Tuples for n = 0..n_max, each verified on construction.

    Laurent specs are dispatched to generate_laurent.
    """
    if spec.direction is Direction.LAURENT:
        return generate_laurent(spec, n_max)
    if n_max < 0:
        raise PreconditionError(f"n_max must be nonnegative, got {n_max}")
    columns = [g.taylor_coeffs(n_max + 1) for g in spec.generators]
    tuples = [_solution(spec, n, [column[n] for column in columns]) for n in range(n_max + 1)]
    for t in tuples:
        if not t.is_integral:
            raise InconsistencyError(f"{spec.name} n={t.index}: Taylor tuple is not integral")
    logger.info(MSG_FAMILY_GENERATED.format(name=spec.name, count=len(tuples)))
    return tuples


def generate_laurent(spec: FamilySpec, n_max: int) -> List[SolutionTuple]:
    """Rational tuples (alpha_n, beta_n, ...) from the expansions at infinity."""
    if spec.direction is not Direction.LAURENT:
        raise UnsupportedShapeError(f"{spec.name} is a {spec.direction.value} family")
    if n_max < 0:
        raise PreconditionError(f"n_max must be nonnegative, got {n_max}")
    columns = [g.laurent_coeffs_at_infinity(n_max + 1) for g in spec.generators]
    tuples = [_solution(spec, n, [column[n] for column in columns]) for n in range(n_max + 1)]
    logger.info(MSG_FAMILY_GENERATED.format(name=spec.name, count=len(tuples)))
    return tuples


def recurrence_values(spec: FamilySpec, n: int) -> Tuple[int, ...]:
    """Entries of tuple n from the recurrence: each form evaluated at (w_{n+1}, w_n)."""
    if spec.recurrence is None or spec.forms is None:
        raise UnsupportedShapeError(f"{spec.name} has no recurrence substitution")
    big_a, big_b = recurrence_pair(spec.recurrence, n)
    return tuple(alpha * big_a * big_a + beta * big_a * big_b + gamma * big_b * big_b for alpha, beta, gamma in spec.forms)


def generate_from_recurrence(spec: FamilySpec, n_max: int) -> List[SolutionTuple]:
    """Same tuples as generate(), computed by iterating the recurrence instead."""
    if spec.recurrence is None or spec.forms is None:
        raise UnsupportedShapeError(f"{spec.name} has no recurrence substitution")
    terms = spec.recurrence.terms(n_max + 2)
    tuples = []
    for n in range(n_max + 1):
        big_a, big_b = terms[n + 1], terms[n]
        entries = [alpha * big_a * big_a + beta * big_a * big_b + gamma * big_b * big_b for alpha, beta, gamma in spec.forms]
        tuples.append(_solution(spec, n, entries))
    return tuples


def clear_denominators(t: SolutionTuple, base: int, cap: int = DEFAULT_CLEAR_CAP) -> SolutionTuple:
    """
    Scale a rational tuple by the smallest power of base that makes it integral.

    The exponent is read off the prime valuations: base^k clears a
    denominator p1^e1 * ... when every p_i divides base and
    k * v_{p_i}(base) >= e_i.

    Args:
        t: Tuple to clear
        base: Integer base >= 2
        cap: Largest exponent accepted

    Raises:
        NotClearableError: if a denominator has a prime not dividing base,
            or the exponent needed exceeds cap
    """
    if base < 2:
        raise PreconditionError(f"clearing base must be at least 2, got {base}")
    label = f"{t.family or 'tuple'} n={t.index}"
    base_valuations = factorint(base)
    values = t.entries + ((t.residual,) if t.residual is not None else ())
    exponent = 0
    for value in values:
        for prime, multiplicity in factorint(value.denominator).items():
            if prime not in base_valuations:
                raise NotClearableError(f"{label}: denominator {value.denominator} has prime {prime} not dividing {base}")
            exponent = max(exponent, -(-multiplicity // base_valuations[prime]))
    if exponent > cap:
        raise NotClearableError(f"{label}: clearing needs {base}^{exponent}, above the cap {cap}")
    return t.scaled(base ** exponent)


def check_shift_remark(n_max: int) -> bool:
    """d_n = -a_{n+1} for n <= n_max in the family with entries (a, b, c, d)."""
    tuples = generate(get_family("thm2.4"), n_max + 1)
    return all(tuples[n].entries[3] == -tuples[n + 1].entries[0] for n in range(n_max + 1))


# ----------------------------------------------------------------------------
# Built-in families
# ----------------------------------------------------------------------------


def _gf(numerator: Sequence[int], denominator: Sequence[int]) -> RationalFunction:
    return RationalFunction.of(numerator, denominator)


def _gfs(numerators: Sequence[Sequence[int]], denominator: Sequence[int]) -> Tuple[RationalFunction, ...]:
    return tuple(_gf(numerator, denominator) for numerator in numerators)


@lru_cache(maxsize=1)
def _builtin_families() -> Tuple[FamilySpec, ...]:
    rec_82 = LinearRecurrence2(9, 1, name="w(n+2) = 9w(n+1) + w(n)")
    rec_neg9 = LinearRecurrence2.from_shifts(9, -7, name="w(n+2) = 9w(n) - 7w(n+1)")
    rec_6 = LinearRecurrence2.from_shifts(-6, 2, name="w(n+2) = -6w(n) + 2w(n+1)")
    rec_neg3 = LinearRecurrence2.from_shifts(3, -5, name="w(n+2) = 3w(n) - 5w(n+1)")
    rec_39 = LinearRecurrence2.from_shifts(3, 6, name="w(n+2) = 6w(n+1) + 3w(n)")

    den_82 = (1, -82, -82, 1)
    den_fib = (1, -2, -2, 1)
    den_58 = (1, -58, -522, 729)
    den_2 = (1, 2, -12, -216)
    den_28 = (1, -28, -84, 27)
    den_39 = (1, -39, -117, 27)

    cubic_82 = _gfs([(1, 53, 9), (2, -26, -12), (2, 8, -10)], den_82)
    cubic_58 = _gfs([(2, -8, -90), (1, 53, 9), (2, 22, -108)], den_58)
    cubic_2 = _gfs([(2, 22, 60), (1, -13, -6), (1, 11, -54)], den_2)

    quartic_fib = ((8, 40, -24), (6, -44, -18), (14, -4, -42), (9, 0, 27), (4, 0, 12), (15, 0, 45))

    return (
        FamilySpec(
            name="thm1.1",
            exponent=3,
            labels=("a", "b", "c"),
            generators=cubic_82,
            lhs=(0, 1),
            rhs=(2,),
            residual=ResidualTerm(1, -1),
            recurrence=rec_82,
            forms=((1, 7, -9), (2, -4, 12), (2, 0, 10)),
            description="a^3 + b^3 = c^3 + (-1)^n",
        ),
        FamilySpec(
            name="thm2.4",
            exponent=3,
            labels=("a", "b", "c", "d"),
            generators=_gfs([(1, -3, 9), (2, 6, -12), (2, 8, -10), (1, -11, 1)], den_fib),
            lhs=(0, 1),
            rhs=(2, 3),
            recurrence=FIBONACCI,
            forms=((1, 7, -9), (2, -4, 12), (2, 0, 10), (1, -9, -1)),
            description="a^3 + b^3 = c^3 + d^3 from Fibonacci numbers",
        ),
        FamilySpec(
            name="thm2.5",
            exponent=3,
            labels=("a", "b", "c"),
            generators=cubic_58,
            lhs=(0, 1),
            rhs=(2,),
            residual=ResidualTerm(1, -9),
            recurrence=rec_neg9,
            forms=((2, 0, 10), (1, -9, -1), (2, -4, 12)),
            description="a^3 + b^3 = c^3 + ((-9)^n)^3",
        ),
        FamilySpec(
            name="thm2.6",
            exponent=3,
            labels=("a", "b", "c"),
            generators=cubic_2,
            lhs=(0, 1),
            rhs=(2,),
            residual=ResidualTerm(2, 6),
            recurrence=rec_6,
            forms=((2, 0, 10), (1, -9, -1), (1, 7, -9)),
            description="a^3 + b^3 = c^3 + (2*6^n)^3",
        ),
        FamilySpec(
            name="thm2.7",
            exponent=4,
            labels=("a", "b", "c", "d", "e", "f"),
            generators=_gfs(
                [(8, 8, 24), (6, -68, 18), (14, -60, 42), (9, 18, -27), (4, 8, -12), (15, 30, -45)], den_fib
            ),
            lhs=(0, 1, 2, 3, 4),
            rhs=(5,),
            recurrence=FIBONACCI,
            forms=quartic_fib,
            description="a^4 + b^4 + c^4 + d^4 + e^4 = f^4 from Fibonacci numbers",
        ),
        FamilySpec(
            name="thm2.8",
            exponent=4,
            labels=("a", "b", "c", "d", "e"),
            generators=_gfs([(6, 184, 54), (14, -64, 126), (9, 0, -81), (4, 0, -36), (15, 0, -135)], den_28),
            lhs=(0, 1, 2, 3),
            rhs=(4,),
            residual=ResidualTerm(8, -3, sign=-1),
            recurrence=rec_neg3,
            forms=quartic_fib[1:],
            description="a^4 + b^4 + c^4 + d^4 = e^4 - (8*(-3)^n)^4",
        ),
        FamilySpec(
            name="thm2.9",
            exponent=4,
            labels=("a", "b", "c", "d", "e", "f"),
            generators=_gfs(
                [(4, -16, 12), (3, 6, -9), (2, -20, 6), (4, 8, -12), (2, 4, 6), (5, 10, -15)], den_fib
            ),
            lhs=(0, 1, 2, 3, 4),
            rhs=(5,),
            recurrence=FIBONACCI,
            forms=((4, 0, -12), (3, 0, 9), (2, -12, -6), (4, 0, 12), (2, 12, -6), (5, 0, 15)),
            description="a^4 + b^4 + c^4 + d^4 + e^4 = f^4, second Fibonacci family",
        ),
        FamilySpec(
            name="thm2.10",
            exponent=4,
            labels=("a", "b", "c", "d", "e"),
            generators=_gfs([(4, -24, 36), (3, 0, -27), (4, 0, -36), (2, 60, 18), (5, 0, -45)], den_39),
            lhs=(0, 1, 2, 3),
            rhs=(4,),
            residual=ResidualTerm(2, -3, sign=-1),
            recurrence=rec_39,
            forms=((4, 0, -12), (3, 0, 9), (4, 0, 12), (2, 12, -6), (5, 0, 15)),
            description="a^4 + b^4 + c^4 + d^4 = e^4 - (2*(-3)^n)^4",
        ),
        FamilySpec(
            name="thm1.1-laurent",
            exponent=3,
            labels=("alpha", "beta", "gamma"),
            generators=cubic_82,
            lhs=(0, 1),
            rhs=(2,),
            residual=ResidualTerm(1, -1),
            direction=Direction.LAURENT,
            recurrence=rec_82,
            description="alpha^3 + beta^3 = gamma^3 + (-1)^n",
        ),
        FamilySpec(
            name="thm2.5-laurent",
            exponent=3,
            labels=("alpha", "beta", "gamma"),
            generators=cubic_58,
            lhs=(0, 1),
            rhs=(2,),
            residual=ResidualTerm(1, Fraction(-1, 9), offset=1, sign=-1),
            direction=Direction.LAURENT,
            recurrence=rec_neg9,
            clear_base=9,
            description="alpha^3 + beta^3 = gamma^3 - ((-1/9)^(n+1))^3",
        ),
        FamilySpec(
            name="thm2.6-laurent",
            exponent=3,
            labels=("alpha", "beta", "gamma"),
            generators=cubic_2,
            lhs=(0, 1),
            rhs=(2,),
            residual=ResidualTerm(2, Fraction(1, 6), offset=1, sign=-1),
            direction=Direction.LAURENT,
            recurrence=rec_6,
            clear_base=6,
            description="alpha^3 + beta^3 = gamma^3 - (2/6^(n+1))^3",
        ),
    )


def builtin_families() -> List[FamilySpec]:
    """The eight Taylor families followed by the three Laurent families."""
    return list(_builtin_families())


def family_names() -> List[str]:
    return [spec.name for spec in _builtin_families()]


def get_family(name: str) -> FamilySpec:
    for spec in _builtin_families():
        if spec.name == name:
            return spec
    raise UnknownNameError(f"unknown family {name!r}; valid names: {', '.join(family_names())}")
