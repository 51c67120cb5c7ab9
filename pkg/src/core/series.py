"""
Univariate polynomials and rational functions over Q.

Polynomials are dense and immutable. Rational functions expand as power
series at x = 0 (taylor_coeffs) and in powers of 1/x at infinity
(laurent_coeffs_at_infinity); both use the same linear recurrence against
the denominator, the second after reversing coefficient order.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.core.exact import RationalLike, format_rational, parse_rational
from src.core.exceptions import (
    NotTaylorExpandableError,
    ParseError,
    PreconditionError,
    UndefinedRationalError,
    UnsupportedShapeError,
)

_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<var>x(?:\^(?P<exp>\d+))?)?$"
)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coefficients[i] is the coefficient of x**i, no trailing zeros."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coefficients = [Fraction(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, *coefficients: RationalLike) -> "Polynomial":
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "Polynomial":
        return cls((Fraction(0),) * degree + (Fraction(coefficient),))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            if not x:
                continue
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    def scale(self, factor: RationalLike) -> "Polynomial":
        return Polynomial(tuple(c * factor for c in self.coefficients))

    def truncate(self, count: int) -> "Polynomial":
        """Keep the terms of degree < count."""
        return Polynomial(self.coefficients[:count])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial((Fraction(0),) * k + self.coefficients)

    def reversed(self, degree: Optional[int] = None) -> "Polynomial":
        """
        Coefficient reversal x**degree * p(1/x).

        Args:
            degree: Declared degree to reverse against, defaults to the actual degree
        """
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise UnsupportedShapeError(f"cannot reverse degree {self.degree} polynomial to degree {degree}")
        padded = self.coefficients + (Fraction(0),) * (degree + 1 - len(self.coefficients))
        return Polynomial(tuple(reversed(padded)))

    def evaluate(self, x: RationalLike) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms: List[str] = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                terms.append(format_rational(c))
                continue
            power = "x" if i == 1 else f"x^{i}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{format_rational(c)}*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """
        Parse "c0 + c1*x + c2*x^2 + ...".

        Accepts rational coefficients, implicit multiplication ("53x"),
        "x**2" as a power and terms in any order.
        """
        cleaned = text.replace(" ", "").replace("**", "^")
        if not cleaned:
            raise ParseError("empty polynomial literal")
        if cleaned[0] not in "+-":
            cleaned = "+" + cleaned
        pieces = re.findall(r"[+-][^+-]*", cleaned)
        if "".join(pieces) != cleaned:
            raise ParseError(f"not a polynomial literal: {text!r}")
        coefficients: dict = {}
        for piece in pieces:
            sign, body = piece[0], piece[1:]
            match = _TERM_RE.match(body)
            if not body or not match or (match.group("coef") is None and match.group("var") is None):
                raise ParseError(f"bad term {piece!r} in polynomial {text!r}")
            try:
                value = parse_rational(match.group("coef")) if match.group("coef") else Fraction(1)
            except UndefinedRationalError:
                raise ParseError(f"zero denominator in term {piece!r}") from None
            if sign == "-":
                value = -value
            if match.group("var") is None:
                exponent = 0
            else:
                exponent = int(match.group("exp")) if match.group("exp") else 1
            coefficients[exponent] = coefficients.get(exponent, Fraction(0)) + value
        size = max(coefficients) + 1
        return cls(tuple(coefficients.get(i, Fraction(0)) for i in range(size)))


X = Polynomial.of(0, 1)
ONE = Polynomial.of(1)


def poly_arith(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact add, sub or mul of two polynomials."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise PreconditionError(f"unknown polynomial operation {op!r}")


def series_coeffs(numerator: Polynomial, denominator: Polynomial, count: int) -> List[Fraction]:
    """
    Power-series coefficients of numerator/denominator at 0.

    Solves q0*a_n = p_n - sum_{i>=1} q_i*a_{n-i}.
    """
    q0 = denominator.coefficient(0)
    if q0 == 0:
        raise NotTaylorExpandableError(f"denominator {denominator} vanishes at x = 0")
    tail = denominator.coefficients[1:]
    out: List[Fraction] = []
    for n in range(count):
        acc = numerator.coefficient(n)
        for i, qi in enumerate(tail, start=1):
            if i > n:
                break
            if qi:
                acc -= qi * out[n - i]
        out.append(acc / q0)
    return out


@dataclass(frozen=True)
class RationalFunction:
    """numerator/denominator with a nonzero denominator."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.denominator.is_zero():
            raise UndefinedRationalError("rational function with zero denominator")

    @classmethod
    def of(cls, numerator: Sequence[RationalLike], denominator: Sequence[RationalLike]) -> "RationalFunction":
        return cls(Polynomial.of(*numerator), Polynomial.of(*denominator))

    def taylor_coeffs(self, count: int) -> List[Fraction]:
        return series_coeffs(self.numerator, self.denominator, count)

    def laurent_coeffs_at_infinity(self, count: int) -> List[Fraction]:
        """
        alpha_k, the coefficient of x**-(k+1), for k < count.

        With x = 1/y the function becomes y**(D-N) * rev(num)(y) / rev(den)(y),
        which expands at y = 0.
        """
        if self.numerator.is_zero():
            return [Fraction(0)] * count
        shift = self.denominator.degree - self.numerator.degree
        if shift < 1:
            raise UnsupportedShapeError(
                f"Laurent expansion needs deg(numerator) < deg(denominator), "
                f"got {self.numerator.degree} >= {self.denominator.degree}"
            )
        head = series_coeffs(self.numerator.reversed(), self.denominator.reversed(), count + 1)
        # y**shift * head, read from y**1 onwards
        return [head[k + 1 - shift] if k + 1 >= shift else Fraction(0) for k in range(count)]

    def equivalent(self, other: "RationalFunction") -> bool:
        """Equal as rational functions (cross-multiplication)."""
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __str__(self) -> str:
        return f"({self.numerator})/({self.denominator})"

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        """
        Parse "(<poly>)/(<poly>)".

        The numerator may be bare ("1/(1-x)"); a literal without "/(" is a
        polynomial over 1.
        """
        cleaned = text.replace(" ", "")
        split = cleaned.rfind("/(")
        if split < 0:
            return cls(Polynomial.parse(_unwrap(cleaned)), ONE)
        head, tail = cleaned[:split], cleaned[split + 1:]
        if not tail.endswith(")") or not head:
            raise ParseError(f"not a rational function literal: {text!r}")
        denominator = Polynomial.parse(tail[1:-1])
        if denominator.is_zero():
            raise ParseError(f"zero denominator in {text!r}")
        return cls(Polynomial.parse(_unwrap(head)), denominator)


def _unwrap(text: str) -> str:
    if text.startswith("(") and text.endswith(")"):
        return text[1:-1]
    return text


def taylor_coeffs(rf: RationalFunction, count: int) -> List[Fraction]:
    """Coefficients a_0..a_{count-1} of rf expanded at x = 0."""
    return rf.taylor_coeffs(count)


def laurent_coeffs_at_infinity(rf: RationalFunction, count: int) -> List[Fraction]:
    """Coefficients alpha_0..alpha_{count-1} of rf expanded in powers of 1/x."""
    return rf.laurent_coeffs_at_infinity(count)
