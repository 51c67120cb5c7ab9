"""
Order-2 integer recurrences and the generating functions of their quadratic
expressions.

A recurrence w_{n+2} = c1*w_{n+1} + c2*w_n has characteristic roots l, m
with l + m = c1 and l*m = -c2. Every quadratic expression in
(w_{n+1}, w_n) is a combination of l**2n, m**2n and (l*m)**n, so its
generating function has the common denominator

    (1 - l**2 x)(1 - m**2 x)(1 - l*m x) = 1 - e1 x + e2 x**2 - e3 x**3

with e1 = c1**2 + c2, e2 = -c2*(c1**2 + c2), e3 = -c2**3. The numerator is
recovered from the first three terms.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.core.series import Polynomial, RationalFunction


@dataclass(frozen=True)
class LinearRecurrence2:
    """w_{n+2} = c1*w_{n+1} + c2*w_n with w_0 = w0, w_1 = w1."""

    c1: int
    c2: int
    w0: int = 0
    w1: int = 1
    name: str = field(default="", compare=False)

    @classmethod
    def from_shifts(cls, omega_n: int, omega_n1: int, w0: int = 0, w1: int = 1, name: str = "") -> "LinearRecurrence2":
        """
        Build from a statement w_{n+2} = omega_n*w_n + omega_n1*w_{n+1}.

        Args:
            omega_n: Coefficient of w_n
            omega_n1: Coefficient of w_{n+1}
        """
        return cls(c1=omega_n1, c2=omega_n, w0=w0, w1=w1, name=name)

    def terms(self, count: int) -> List[int]:
        """w_0 .. w_{count-1} by iteration."""
        out: List[int] = []
        a, b = self.w0, self.w1
        for _ in range(count):
            out.append(a)
            a, b = b, self.c1 * b + self.c2 * a
        return out

    def term(self, n: int) -> int:
        a, b = self.w0, self.w1
        for _ in range(n):
            a, b = b, self.c1 * b + self.c2 * a
        return a

    def casoratian(self, n: int, scale: int = 1) -> int:
        """scale * (w_{n+1}**2 - w_n*w_{n+2})."""
        w_n, w_n1, w_n2 = self.terms(n + 3)[n:n + 3]
        return scale * (w_n1 * w_n1 - w_n * w_n2)

    def casoratian_closed_form(self, n: int, scale: int = 1) -> int:
        """scale * (-c2)**n * (w1**2 - w0*(c1*w1 + c2*w0))."""
        initial = self.w1 * self.w1 - self.w0 * (self.c1 * self.w1 + self.c2 * self.w0)
        return scale * (-self.c2) ** n * initial

    def symmetric_denominator(self) -> Polynomial:
        """Shared denominator of every quadratic-expression generating function."""
        c1, c2 = self.c1, self.c2
        e1 = c1 * c1 + c2
        e2 = -c2 * e1
        e3 = -(c2 ** 3)
        return Polynomial.of(1, -e1, e2, -e3)

    def form_ogf(self, coefficients: Sequence[int]) -> RationalFunction:
        """
        Generating function of alpha*w_{n+1}**2 + beta*w_{n+1}*w_n + gamma*w_n**2.

        Args:
            coefficients: (alpha, beta, gamma)
        """
        alpha, beta, gamma = coefficients
        w = self.terms(4)
        head = [alpha * w[n + 1] ** 2 + beta * w[n + 1] * w[n] + gamma * w[n] ** 2 for n in range(3)]
        return _ogf_from_head(head, self.symmetric_denominator())

    def square_ogf(self) -> RationalFunction:
        return self.form_ogf((0, 0, 1))

    def cross_ogf(self) -> RationalFunction:
        return self.form_ogf((0, 1, 0))

    def __str__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"{label}w(n+2) = {self.c1}*w(n+1) + {self.c2}*w(n), w(0) = {self.w0}, w(1) = {self.w1}"


def _ogf_from_head(head: Sequence[int], denominator: Polynomial) -> RationalFunction:
    # numerator = (truncated series * denominator) mod x**3
    series = Polynomial(tuple(Fraction(h) for h in head))
    return RationalFunction((series * denominator).truncate(3), denominator)


FIBONACCI = LinearRecurrence2(1, 1, name="fibonacci")


def term(rec: LinearRecurrence2, n: int) -> int:
    return rec.term(n)


def casoratian(rec: LinearRecurrence2, n: int, scale: int = 1) -> int:
    return rec.casoratian(n, scale)


def square_ogf(rec: LinearRecurrence2) -> RationalFunction:
    """Generating function of w_n**2."""
    return rec.square_ogf()


def cross_ogf(rec: LinearRecurrence2) -> RationalFunction:
    """Generating function of w_n*w_{n+1}."""
    return rec.cross_ogf()


def quadratic_values(rec: LinearRecurrence2, coefficients: Sequence[int], count: int) -> List[int]:
    """alpha*w_{n+1}**2 + beta*w_{n+1}*w_n + gamma*w_n**2 for n < count, by iteration."""
    alpha, beta, gamma = coefficients
    w = rec.terms(count + 1)
    return [alpha * w[n + 1] ** 2 + beta * w[n + 1] * w[n] + gamma * w[n] ** 2 for n in range(count)]


def recurrence_pair(rec: LinearRecurrence2, n: int) -> Tuple[int, int]:
    """(w_{n+1}, w_n)."""
    w = rec.terms(n + 2)
    return w[n + 1], w[n]
