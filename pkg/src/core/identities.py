"""
Parametric identities built from quadratic forms, and their certification.

A QuadraticFormTuple is a list of quadratic forms in two or three free
parameters together with an arrangement: the sum of the lhs forms raised to
the exponent equals the sum of the rhs forms raised to the exponent.
Certification expands both sides into MultiPoly values over the radical
tower and compares them coefficient by coefficient, which proves the identity.

Constructions:
    euler_forms           seed of p^3+q^3+r^3 = s^3 -> four forms in (a, b)
    five_cube_forms       seed of five cubes = a cube -> six forms in (a, b, c)
    chord_forms           radical-free general solution through a seed
    five_cube_chord_forms the same for the five-cube surface
    change_variables      linear substitution of the parameters
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.config.constants import MSG_CERTIFICATION_FAILED, MSG_CERTIFIED
from src.core.exact import (
    RadicalScalar,
    RationalLike,
    format_rational,
    parse_rational,
    sqrt_of_rational,
)
from src.core.exceptions import (
    DegenerateDirectionError,
    DegenerateSeedError,
    InconsistencyError,
    InvalidSeedError,
    ParseError,
    PreconditionError,
    UndefinedRationalError,
    UnknownNameError,
    UnsupportedShapeError,
)
from src.utils.logging import get_logger

logger = get_logger("identities")

Scalar = Union[RadicalScalar, int, Fraction]
Exponents = Tuple[int, ...]


class MultiPoly:
    """
    Sparse polynomial in a fixed number of variables with RadicalScalar
    coefficients. Zero coefficients are never stored.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, Scalar]] = None):
        cleaned: Dict[Exponents, RadicalScalar] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != nvars or any(e < 0 for e in exponents):
                raise PreconditionError(f"bad exponent vector {exponents} for {nvars} variables")
            coefficient = RadicalScalar.coerce(coefficient)
            if not coefficient.is_zero():
                cleaned[exponents] = coefficient
        self.nvars = nvars
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[Exponents, RadicalScalar]) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly._terms = {k: v for k, v in terms.items() if not v.is_zero()}
        return poly

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @property
    def terms(self) -> Dict[Exponents, RadicalScalar]:
        return dict(self._terms)

    def sorted_terms(self) -> List[Tuple[Exponents, RadicalScalar]]:
        """Terms in graded lexicographic order, first variable highest."""
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def coefficient(self, exponents: Exponents) -> RadicalScalar:
        return self._terms.get(tuple(exponents), RadicalScalar.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self._terms)

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise PreconditionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            out[exponents] = out[exponents] + coefficient if exponents in out else coefficient
        return MultiPoly._from_clean(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._from_clean(self.nvars, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            factor = RadicalScalar.coerce(other)
            return MultiPoly._from_clean(self.nvars, {k: v * factor for k, v in self._terms.items()})
        self._check(other)
        out: Dict[Exponents, RadicalScalar] = {}
        for left_exp, left in self._terms.items():
            for right_exp, right in other._terms.items():
                exponents = tuple(x + y for x, y in zip(left_exp, right_exp))
                product = left * right
                out[exponents] = out[exponents] + product if exponents in out else product
        return MultiPoly._from_clean(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MultiPoly.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, point: Sequence[Scalar]) -> RadicalScalar:
        if len(point) != self.nvars:
            raise PreconditionError(f"expected {self.nvars} coordinates, got {len(point)}")
        total = RadicalScalar.zero()
        for exponents, coefficient in self._terms.items():
            term = coefficient
            for value, e in zip(point, exponents):
                if e:
                    term = term * (RadicalScalar.coerce(value) ** e)
            total = total + term
        return total

    def substitute(self, values: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose: replace variable i by values[i] (all in a common new variable set)."""
        if len(values) != self.nvars:
            raise PreconditionError(f"expected {self.nvars} substitutions, got {len(values)}")
        nvars = values[0].nvars
        total = MultiPoly(nvars)
        for exponents, coefficient in self._terms.items():
            term = MultiPoly.constant(nvars, coefficient)
            for value, e in zip(values, exponents):
                if e:
                    term = term * (value ** e)
            total = total + term
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __len__(self) -> int:
        return len(self._terms)

    def to_string(self, variables: Sequence[str]) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponents, coefficient in self.sorted_terms():
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(variables, exponents) if e
            )
            if coefficient.is_rational():
                value = coefficient.to_fraction()
                if not monomial:
                    parts.append(format_rational(value))
                elif value == 1:
                    parts.append(monomial)
                elif value == -1:
                    parts.append(f"-{monomial}")
                else:
                    parts.append(f"{format_rational(value)}*{monomial}")
            else:
                parts.append(f"({coefficient})*{monomial}" if monomial else f"({coefficient})")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_string([f'x{i}' for i in range(self.nvars)])})"


def monomial_key(variables: Sequence[str], letters: str) -> Exponents:
    """Exponent vector for a monomial written as its letters, e.g. "ab" or "cc"."""
    exponents = [0] * len(variables)
    for letter in letters:
        if letter not in variables:
            raise PreconditionError(f"unknown variable {letter!r} in monomial {letters!r}")
        exponents[list(variables).index(letter)] += 1
    return tuple(exponents)


def quadratic_form(variables: Sequence[str], coefficients: Mapping[str, Scalar]) -> MultiPoly:
    """
    Build a quadratic form from monomial names.

    Example:
        quadratic_form("ab", {"aa": 3, "ab": 5, "bb": -5})  # 3a^2 + 5ab - 5b^2
    """
    terms: Dict[Exponents, RadicalScalar] = {}
    for letters, value in coefficients.items():
        if len(letters) != 2:
            raise UnsupportedShapeError(f"monomial {letters!r} is not of degree 2")
        key = monomial_key(variables, letters)
        terms[key] = terms.get(key, RadicalScalar.zero()) + RadicalScalar.coerce(value)
    return MultiPoly(len(variables), terms)


def _q(variables: str, **coefficients: Scalar) -> MultiPoly:
    return quadratic_form(variables, coefficients)


@dataclass(frozen=True)
class QuadraticFormTuple:
    """sum(forms[i]**exponent for i in lhs) == sum(forms[j]**exponent for j in rhs)."""

    name: str
    variables: Tuple[str, ...]
    forms: Tuple[MultiPoly, ...]
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]
    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "forms", tuple(self.forms))
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if len(self.variables) not in (2, 3) or len(set(self.variables)) != len(self.variables):
            raise UnsupportedShapeError(f"need 2 or 3 distinct variables, got {self.variables}")
        if self.exponent not in (3, 4):
            raise UnsupportedShapeError(f"exponent must be 3 or 4, got {self.exponent}")
        for i, form in enumerate(self.forms):
            if form.nvars != len(self.variables):
                raise UnsupportedShapeError(f"form {i} has {form.nvars} variables, expected {len(self.variables)}")
            if not form.is_homogeneous(2):
                raise UnsupportedShapeError(f"form {i} is not homogeneous of degree 2")
        if sorted(self.lhs + self.rhs) != list(range(len(self.forms))):
            raise UnsupportedShapeError("lhs and rhs must partition the form indices")

    def evaluate(self, point: Sequence[Scalar]) -> Tuple[RadicalScalar, ...]:
        return tuple(form.evaluate(point) for form in self.forms)

    def evaluate_rational(self, point: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
        """Values at a rational point; fails if a form has an irrational value there."""
        return tuple(value.to_fraction() for value in self.evaluate(point))

    def with_coefficient_shift(self, form_index: int, monomial: str, delta: Scalar) -> "QuadraticFormTuple":
        """Copy with one monomial coefficient of one form moved by delta."""
        key = monomial_key(self.variables, monomial)
        shift = MultiPoly(len(self.variables), {key: delta})
        forms = list(self.forms)
        forms[form_index] = forms[form_index] + shift
        return QuadraticFormTuple(f"{self.name}+perturbed", self.variables, tuple(forms), self.lhs, self.rhs, self.exponent)

    def form_strings(self) -> List[str]:
        return [form.to_string(self.variables) for form in self.forms]

    def __str__(self) -> str:
        strings = self.form_strings()

        def side(indices: Tuple[int, ...]) -> str:
            return " + ".join(f"({strings[i]})^{self.exponent}" for i in indices)

        return f"{side(self.lhs)} = {side(self.rhs)}"


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of expanding an identity's difference."""

    name: str
    certified: bool
    monomials_checked: int
    nonzero_coefficients: int


def certification_report(t: QuadraticFormTuple) -> CertificationReport:
    """
    Expand sum(lhs**e) - sum(rhs**e) and inspect every coefficient.

    monomials_checked counts the distinct monomials occurring on either side.
    """
    nvars = len(t.variables)
    left = MultiPoly(nvars)
    right = MultiPoly(nvars)
    powers = [form ** t.exponent for form in t.forms]
    for i in t.lhs:
        left = left + powers[i]
    for j in t.rhs:
        right = right + powers[j]
    difference = left - right
    monomials = set(left.terms) | set(right.terms)
    report = CertificationReport(
        name=t.name,
        certified=difference.is_zero(),
        monomials_checked=len(monomials),
        nonzero_coefficients=len(difference),
    )
    if report.certified:
        logger.info(MSG_CERTIFIED.format(name=t.name, monomials=report.monomials_checked))
    else:
        logger.info(MSG_CERTIFICATION_FAILED.format(name=t.name, nonzero=report.nonzero_coefficients))
    return report


def certify_identity(t: QuadraticFormTuple) -> bool:
    """True iff the identity holds as a polynomial identity over the radical tower."""
    return certification_report(t).certified


# ----------------------------------------------------------------------------
# Seeds
# ----------------------------------------------------------------------------


def parse_seed(text: str) -> Tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals such as "3,4,5,6"."""
    parts = [part for part in text.replace(" ", "").split(",")]
    if not parts or any(not part for part in parts):
        raise ParseError(f"not a seed literal: {text!r}")
    try:
        return tuple(parse_rational(part) for part in parts)
    except UndefinedRationalError:
        raise ParseError(f"zero denominator in seed {text!r}") from None


@dataclass(frozen=True)
class CubicSeed:
    """p^3 + q^3 + r^3 = s^3."""

    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        for name in ("p", "q", "r", "s"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.p ** 3 + self.q ** 3 + self.r ** 3 != self.s ** 3:
            raise InvalidSeedError(f"{self.describe()} does not satisfy p^3 + q^3 + r^3 = s^3")

    @classmethod
    def of(cls, entries: Sequence[RationalLike]) -> "CubicSeed":
        if len(entries) != 4:
            raise InvalidSeedError(f"a cubic seed has 4 entries, got {len(entries)}")
        return cls(*entries)

    @property
    def entries(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.p, self.q, self.r, self.s

    def scaled(self, factor: RationalLike) -> "CubicSeed":
        return CubicSeed(*(x * factor for x in self.entries))

    def describe(self) -> str:
        return "(" + ", ".join(format_rational(x) for x in (self.p, self.q, self.r, self.s)) + ")"


@dataclass(frozen=True)
class FiveCubeSeed:
    """p^3 + q^3 + r^3 + s^3 + t^3 = u^3 with p+s, q+t, r-u nonzero."""

    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction
    t: Fraction
    u: Fraction

    def __post_init__(self) -> None:
        for name in ("p", "q", "r", "s", "t", "u"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if sum(x ** 3 for x in self.entries[:5]) != self.u ** 3:
            raise InvalidSeedError(f"{self.describe()} does not satisfy p^3 + q^3 + r^3 + s^3 + t^3 = u^3")
        if self.p + self.s == 0 or self.q + self.t == 0 or self.r - self.u == 0:
            raise DegenerateSeedError(f"{self.describe()} needs p+s, q+t and r-u nonzero")

    @classmethod
    def of(cls, entries: Sequence[RationalLike]) -> "FiveCubeSeed":
        if len(entries) != 6:
            raise InvalidSeedError(f"a five-cube seed has 6 entries, got {len(entries)}")
        return cls(*entries)

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        return self.p, self.q, self.r, self.s, self.t, self.u

    def scaled(self, factor: RationalLike) -> "FiveCubeSeed":
        return FiveCubeSeed(*(x * factor for x in self.entries))

    def describe(self) -> str:
        return "(" + ", ".join(format_rational(x) for x in self.entries) + ")"


# ----------------------------------------------------------------------------
# Chord construction
# ----------------------------------------------------------------------------

_THREE_CUBE_SIGNS = (1, 1, 1, -1)
_FIVE_CUBE_SIGNS = (1, 1, 1, 1, 1, -1)


def _chord_terms(entries, directions, signs):
    """
    (L, Q) for the line x_i + d_i*theta through a point of sum(sign_i*x_i^3) = 0.

    The cubic term in theta vanishes for the directions used here, so the
    second intersection is theta = -L/Q with L = sum(sign*x^2*d) and
    Q = sum(sign*x*d^2); the constant term vanishes because x is on the surface.
    """
    linear = sum(sign * x * x * d for x, d, sign in zip(entries, directions, signs))
    quadratic = sum(sign * x * d * d for x, d, sign in zip(entries, directions, signs))
    return linear, quadratic


def _three_cube_directions(a, b):
    return (a, b, -a, b)


def _five_cube_directions(a, b, c):
    return (a, b, c, -a, -b, c)


def chord_theta(seed: CubicSeed, a: RationalLike, b: RationalLike) -> Fraction:
    """
    Second intersection parameter of the line
    (p + a*t, q + b*t, r - a*t, s + b*t) with the cubic surface.

    Raises:
        DegenerateDirectionError: if a^2(p+r) + b^2(q-s) = 0
    """
    a, b = Fraction(a), Fraction(b)
    linear, quadratic = _chord_terms(seed.entries, _three_cube_directions(a, b), _THREE_CUBE_SIGNS)
    if quadratic == 0:
        raise DegenerateDirectionError(f"direction ({a}, {b}) is degenerate for seed {seed.describe()}")
    return -linear / quadratic


def chord_point(seed: CubicSeed, a: RationalLike, b: RationalLike) -> CubicSeed:
    """The new point (A, B, C, D) on the chord through seed in direction (a, b)."""
    theta = chord_theta(seed, a, b)
    point = [x + d * theta for x, d in zip(seed.entries, _three_cube_directions(Fraction(a), Fraction(b)))]
    try:
        return CubicSeed(*point)
    except InvalidSeedError as e:
        raise InconsistencyError(f"chord point failed the cube relation: {e}") from e


def _chord_forms(entries, variables, directions, signs, lhs, rhs, name) -> QuadraticFormTuple:
    linear, quadratic = _chord_terms(entries, directions, signs)
    # point * Q = x*Q - d*L, homogeneous of degree 2
    forms = tuple(quadratic * x - d * linear for x, d in zip(entries, directions))
    return QuadraticFormTuple(name, tuple(variables), forms, lhs, rhs, 3)


def chord_forms(seed: CubicSeed) -> QuadraticFormTuple:
    """
    Radical-free general solution through seed, in parameters (a, b).

    The chord point is scaled by the theta denominator, giving
    A = a^2 r(p+r) - ab(q^2-s^2) - b^2 p(s-q) and its three siblings.
    """
    a, b = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    return _chord_forms(
        seed.entries, "ab", _three_cube_directions(a, b), _THREE_CUBE_SIGNS, (0, 1, 2), (3,),
        f"chord{seed.describe()}",
    )


def five_cube_chord_theta(seed: FiveCubeSeed, a: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """
    Second intersection parameter along direction (a, b, c, -a, -b, c).

    Raises:
        DegenerateDirectionError: if a^2(p+s) + b^2(q+t) + c^2(r-u) = 0
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    linear, quadratic = _chord_terms(seed.entries, _five_cube_directions(a, b, c), _FIVE_CUBE_SIGNS)
    if quadratic == 0:
        raise DegenerateDirectionError(f"direction ({a}, {b}, {c}) is degenerate for seed {seed.describe()}")
    return -linear / quadratic


def five_cube_chord_point(
    seed: FiveCubeSeed, a: RationalLike, b: RationalLike, c: RationalLike
) -> Tuple[Fraction, ...]:
    """The new point (A, B, C, D, E, F); F moves with the c component of the direction."""
    theta = five_cube_chord_theta(seed, a, b, c)
    directions = _five_cube_directions(Fraction(a), Fraction(b), Fraction(c))
    point = tuple(x + d * theta for x, d in zip(seed.entries, directions))
    if sum(x ** 3 for x in point[:5]) != point[5] ** 3:
        raise InconsistencyError(f"five-cube chord point {point} failed the cube relation")
    return point


def five_cube_chord_forms(seed: FiveCubeSeed) -> QuadraticFormTuple:
    """Radical-free general solution through a five-cube seed, in (a, b, c)."""
    a, b, c = (MultiPoly.variable(3, i) for i in range(3))
    return _chord_forms(
        seed.entries, "abc", _five_cube_directions(a, b, c), _FIVE_CUBE_SIGNS, (0, 1, 2, 3, 4), (5,),
        f"five-cube-chord{seed.describe()}",
    )


# ----------------------------------------------------------------------------
# Radical parametrisations
# ----------------------------------------------------------------------------


def euler_forms(seed: CubicSeed) -> QuadraticFormTuple:
    """
    Four forms in (a, b) with
    (pa^2+mab-rb^2)^3 + (qa^2-nab+sb^2)^3 + (ra^2-mab-pb^2)^3 = (sa^2-nab+qb^2)^3.

    m = (s+q)*sqrt((s-q)/(r+p)) and n = (r-p)*sqrt((r+p)/(s-q)), where the
    second root is taken as lam*(r+p)/(s-q) for lam = sqrt((s-q)/(r+p)) so the
    two roots multiply to 1 even when the ratio is negative.

    Raises:
        DegenerateSeedError: if r+p = 0 or s-q = 0
    """
    p, q, r, s = seed.entries
    x, y = r + p, s - q
    if x == 0 or y == 0:
        raise DegenerateSeedError(f"seed {seed.describe()} needs r+p and s-q nonzero")
    lam = sqrt_of_rational(y / x)
    m = lam * (s + q)
    n = lam * ((r - p) * x / y)
    forms = (
        _q("ab", aa=p, ab=m, bb=-r),
        _q("ab", aa=q, ab=-n, bb=s),
        _q("ab", aa=r, ab=-m, bb=-p),
        _q("ab", aa=s, ab=-n, bb=q),
    )
    return QuadraticFormTuple(f"euler{seed.describe()}", ("a", "b"), forms, (0, 1, 2), (3,), 3)


def five_cube_forms(seed: FiveCubeSeed) -> QuadraticFormTuple:
    """
    Six forms in (a, b, c) whose cubes satisfy F1^3 + ... + F5^3 = F6^3.

    With X = p+s, Y = q+t, Z = r-u the six radical coefficients are
    g = (q-t)sqrt(Y/X), m = (r+u)sqrt(Z/X), k = (p-s)sqrt(X/Y),
    n = (r+u)sqrt(Z/Y), h = (p-s)sqrt(X/Z), l = (q-t)sqrt(Y/Z). All six are
    written through lam = sqrt(X/Y) and mu = sqrt(X/Z) so the branches agree;
    negative ratios give formal roots of negative radicands.
    """
    p, q, r, s, t, u = seed.entries
    x, y, z = p + s, q + t, r - u
    if x == 0 or y == 0 or z == 0:
        raise DegenerateSeedError(f"seed {seed.describe()} needs p+s, q+t and r-u nonzero")
    lam = sqrt_of_rational(x / y)
    mu = sqrt_of_rational(x / z)
    g = lam * ((q - t) * y / x)
    k = lam * (p - s)
    h = mu * (p - s)
    m = mu * ((r + u) * z / x)
    lam_mu = lam * mu
    l_ = lam_mu * ((q - t) * y / x)
    n = lam_mu * ((r + u) * z / x)
    forms = (
        _q("abc", aa=s, bb=p, cc=p, ab=-g, ac=-m),
        _q("abc", aa=q, bb=t, cc=q, ab=-k, bc=-n),
        _q("abc", aa=r, bb=r, cc=-u, ac=-h, bc=-l_),
        _q("abc", aa=p, bb=s, cc=s, ac=m, ab=g),
        _q("abc", aa=t, bb=q, cc=t, ab=k, bc=n),
        _q("abc", aa=u, bb=u, cc=-r, ac=-h, bc=-l_),
    )
    return QuadraticFormTuple(f"five-cube{seed.describe()}", ("a", "b", "c"), forms, (0, 1, 2, 3, 4), (5,), 3)


def change_variables(
    t: QuadraticFormTuple,
    substitution: Mapping[str, Mapping[str, RationalLike]],
    variables: Sequence[str],
    name: Optional[str] = None,
) -> QuadraticFormTuple:
    """
    Substitute each old parameter by a linear form in new parameters.

    Args:
        t: Identity to transform
        substitution: old variable -> {new variable: coefficient}
        variables: The new variables, in order
        name: Name of the result

    Example:
        change_variables(eq14, {"a": {"A": 1, "B": 1}, "b": {"A": 1, "B": -2}}, "AB")
    """
    variables = tuple(variables)
    missing = [v for v in t.variables if v not in substitution]
    if missing:
        raise PreconditionError(f"no substitution given for {missing}")
    images = []
    for old in t.variables:
        image = MultiPoly(len(variables))
        for new, coefficient in substitution[old].items():
            if new not in variables:
                raise PreconditionError(f"unknown new variable {new!r}")
            image = image + MultiPoly.variable(len(variables), variables.index(new)) * Fraction(coefficient)
        images.append(image)
    forms = tuple(form.substitute(images) for form in t.forms)
    return QuadraticFormTuple(name or f"{t.name}'", variables, forms, t.lhs, t.rhs, t.exponent)


# ----------------------------------------------------------------------------
# Built-in identities
# ----------------------------------------------------------------------------


def builtin_cubic_identities() -> List[QuadraticFormTuple]:
    eq14 = QuadraticFormTuple(
        "eq1.4",
        ("a", "b"),
        (
            _q("ab", aa=3, ab=5, bb=-5),
            _q("ab", aa=4, ab=-4, bb=6),
            _q("ab", aa=5, ab=-5, bb=-3),
            _q("ab", aa=6, ab=-4, bb=4),
        ),
        (0, 1, 2),
        (3,),
        3,
    )
    eq15 = QuadraticFormTuple(
        "eq1.5",
        ("A", "B"),
        (
            _q("AB", AA=1, AB=7, BB=-9),
            _q("AB", AA=2, AB=-4, BB=12),
            _q("AB", AA=2, BB=10),
            _q("AB", AA=1, AB=-9, BB=-1),
        ),
        (0, 1),
        (2, 3),
        3,
    )
    return [eq14, eq15]


def builtin_quartic_identities() -> List[QuadraticFormTuple]:
    eq39 = QuadraticFormTuple(
        "eq3.9",
        ("s", "t"),
        (
            _q("st", ss=8, st=40, tt=-24),
            _q("st", ss=6, st=-44, tt=-18),
            _q("st", ss=14, st=-4, tt=-42),
            _q("st", ss=9, tt=27),
            _q("st", ss=4, tt=12),
            _q("st", ss=15, tt=45),
        ),
        (0, 1, 2, 3, 4),
        (5,),
        4,
    )
    eq312 = QuadraticFormTuple(
        "eq3.12",
        ("m", "n"),
        (
            _q("mn", mm=4, nn=-12),
            _q("mn", mm=3, nn=9),
            _q("mn", mm=2, mn=-12, nn=-6),
            _q("mn", mm=4, nn=12),
            _q("mn", mm=2, mn=12, nn=-6),
            _q("mn", mm=5, nn=15),
        ),
        (0, 1, 2, 3, 4),
        (5,),
        4,
    )
    return [eq39, eq312]


def builtin_identities() -> Dict[str, QuadraticFormTuple]:
    return {t.name: t for t in builtin_cubic_identities() + builtin_quartic_identities()}


def get_identity(name: str) -> QuadraticFormTuple:
    identities = builtin_identities()
    if name not in identities:
        raise UnknownNameError(f"unknown identity {name!r}; valid names: {', '.join(identities)}")
    return identities[name]
