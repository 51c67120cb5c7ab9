"""
Exact arithmetic primitives.

Integers are Python ints and rationals are fractions.Fraction, which already
keep the canonical form (positive denominator, reduced, zero as 0/1). This
module adds parsing/printing in the decimal and "num/den" wire format and the
RadicalScalar type: an element of Q adjoined with up to three formal square
roots of squarefree integers.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple, Union

from sympy import factorint

from src.config.constants import MAX_RADICANDS
from src.core.exceptions import (
    ParseError,
    PreconditionError,
    UndefinedRationalError,
    UnsupportedTowerError,
)

Integer = int
Rational = Fraction
RationalLike = Union[int, Fraction]

_INTEGER_RE = re.compile(r"^[+-]?\d+$")
_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rational_normalize(num: Integer, den: Integer) -> Rational:
    """
    Build the canonical rational num/den.

    Raises:
        UndefinedRationalError: if den is zero
    """
    if den == 0:
        raise UndefinedRationalError(f"undefined rational {num}/0")
    return Fraction(num, den)


def parse_integer(text: str) -> Integer:
    """Parse a decimal integer literal (no exponent notation)."""
    cleaned = text.strip()
    if not _INTEGER_RE.match(cleaned):
        raise ParseError(f"not an integer literal: {text!r}")
    return int(cleaned)


def parse_rational(text: str) -> Rational:
    """Parse "n" or "n/d" into a canonical rational."""
    cleaned = text.strip().replace(" ", "")
    match = _RATIONAL_RE.match(cleaned)
    if not match:
        raise ParseError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    return rational_normalize(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """Print a rational as "num/den", or as a bare integer when integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def squarefree_decomposition(n: Integer) -> Tuple[Integer, Integer]:
    """
    Split a nonzero integer as n = f**2 * d with d squarefree.

    The sign of n is carried by d, so f is always positive.

    Args:
        n: Nonzero integer

    Returns:
        Tuple (f, d)
    """
    if n == 0:
        raise PreconditionError("squarefree decomposition of zero is undefined")
    square_root = 1
    squarefree = -1 if n < 0 else 1
    for prime, exponent in factorint(abs(n)).items():
        square_root *= prime ** (exponent // 2)
        if exponent % 2:
            squarefree *= prime
    return square_root, squarefree


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _merge_towers(left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, ...]:
    tower = tuple(sorted(set(left) | set(right)))
    if len(tower) > MAX_RADICANDS:
        raise UnsupportedTowerError(
            f"tower needs {len(tower)} radicands {list(tower)}, at most {MAX_RADICANDS} supported"
        )
    return tower


@dataclass(frozen=True, eq=False)
class RadicalScalar:
    """
    Element of Q(sqrt(d1), ..., sqrt(dk)), k <= 3, held formally.

    components[mask] is the coefficient of the product of sqrt(radicands[i])
    over the bits i set in mask. The square roots are independent formal
    symbols with sqrt(d)**2 = d, so equality and zero-testing are
    componentwise. Radicands not used by any nonzero component are dropped,
    keeping every value in its smallest tower.
    """

    radicands: Tuple[int, ...] = ()
    components: Tuple[Fraction, ...] = (Fraction(0),)

    def __post_init__(self) -> None:
        radicands = tuple(int(d) for d in self.radicands)
        components = tuple(Fraction(c) for c in self.components)
        if len(radicands) > MAX_RADICANDS:
            raise UnsupportedTowerError(
                f"{len(radicands)} radicands given, at most {MAX_RADICANDS} supported"
            )
        if list(radicands) != sorted(set(radicands)):
            raise PreconditionError(f"radicands must be distinct and sorted: {radicands}")
        for d in radicands:
            if d in (0, 1) or squarefree_decomposition(d)[0] != 1:
                raise PreconditionError(f"radicand {d} is not a squarefree integer other than 0 and 1")
        if len(components) != 1 << len(radicands):
            raise PreconditionError(
                f"expected {1 << len(radicands)} components for {len(radicands)} radicands, got {len(components)}"
            )
        radicands, components = _compact(radicands, components)
        object.__setattr__(self, "radicands", radicands)
        object.__setattr__(self, "components", components)

    @classmethod
    def _trusted(cls, radicands: Tuple[int, ...], components: Tuple[Fraction, ...]) -> "RadicalScalar":
        radicands, components = _compact(radicands, components)
        value = object.__new__(cls)
        object.__setattr__(value, "radicands", radicands)
        object.__setattr__(value, "components", components)
        return value

    @classmethod
    def rational(cls, value: RationalLike) -> "RadicalScalar":
        return cls._trusted((), (Fraction(value),))

    @classmethod
    def zero(cls) -> "RadicalScalar":
        return cls._trusted((), (Fraction(0),))

    @classmethod
    def one(cls) -> "RadicalScalar":
        return cls._trusted((), (Fraction(1),))

    @classmethod
    def sqrt(cls, d: Integer) -> "RadicalScalar":
        """The basis element sqrt(d) for a squarefree integer d."""
        if d == 1:
            return cls.one()
        return cls((d,), (Fraction(0), Fraction(1)))

    @classmethod
    def coerce(cls, value: Union["RadicalScalar", RationalLike]) -> "RadicalScalar":
        if isinstance(value, RadicalScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot use {type(value).__name__} as a RadicalScalar")

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_rational(self) -> bool:
        return len(self.radicands) == 0

    def to_fraction(self) -> Fraction:
        """Return the value as a rational; fails if any radical part is present."""
        if not self.is_rational():
            raise PreconditionError(f"{self} is not rational")
        return self.components[0]

    def support(self) -> Dict[FrozenSet[int], Fraction]:
        """Nonzero coefficients keyed by the set of radicands in each basis product."""
        return {
            frozenset(d for i, d in enumerate(self.radicands) if mask >> i & 1): c
            for mask, c in enumerate(self.components)
            if c
        }

    def embed(self, tower: Tuple[int, ...]) -> Tuple[Fraction, ...]:
        """Components of this value re-indexed in a tower containing its radicands."""
        positions = [tower.index(d) for d in self.radicands]
        out = [Fraction(0)] * (1 << len(tower))
        for mask, c in enumerate(self.components):
            if not c:
                continue
            target = 0
            for i, position in enumerate(positions):
                if mask >> i & 1:
                    target |= 1 << position
            out[target] = c
        return tuple(out)

    def __add__(self, other: Union["RadicalScalar", RationalLike]) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            return RadicalScalar._trusted(self.radicands, (self.components[0] + other,) + self.components[1:])
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        tower = _merge_towers(self.radicands, other.radicands)
        left, right = self.embed(tower), other.embed(tower)
        return RadicalScalar._trusted(tower, tuple(x + y for x, y in zip(left, right)))

    __radd__ = __add__

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar._trusted(self.radicands, tuple(-c for c in self.components))

    def __sub__(self, other: Union["RadicalScalar", RationalLike]) -> "RadicalScalar":
        if not isinstance(other, (int, Fraction, RadicalScalar)):
            return NotImplemented
        return self + (-RadicalScalar.coerce(other))

    def __rsub__(self, other: RationalLike) -> "RadicalScalar":
        return (-self) + other

    def __mul__(self, other: Union["RadicalScalar", RationalLike]) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            return RadicalScalar._trusted(self.radicands, tuple(c * other for c in self.components))
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        tower = _merge_towers(self.radicands, other.radicands)
        left, right = self.embed(tower), other.embed(tower)
        out = [Fraction(0)] * len(left)
        for i, x in enumerate(left):
            if not x:
                continue
            for j, y in enumerate(right):
                if not y:
                    continue
                term = x * y
                common = i & j
                # sqrt(d) * sqrt(d) = d
                for bit, d in enumerate(tower):
                    if common >> bit & 1:
                        term *= d
                out[i ^ j] += term
        return RadicalScalar._trusted(tower, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "RadicalScalar":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise UndefinedRationalError("division of a RadicalScalar by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> "RadicalScalar":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = RadicalScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar.rational(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self.support() == other.support()

    def __hash__(self) -> int:
        # rational values hash like the int or Fraction they equal
        if self.is_rational():
            return hash(self.components[0])
        return hash(frozenset(self.support().items()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        terms = []
        for mask in sorted(range(len(self.components)), key=lambda m: (_popcount(m), m)):
            c = self.components[mask]
            if not c:
                continue
            if mask == 0:
                terms.append(format_rational(c))
                continue
            radical = "*".join(f"sqrt({d})" for i, d in enumerate(self.radicands) if mask >> i & 1)
            if c == 1:
                terms.append(radical)
            elif c == -1:
                terms.append(f"-{radical}")
            else:
                terms.append(f"{format_rational(c)}*{radical}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"RadicalScalar({self})"


def _compact(
    radicands: Tuple[int, ...], components: Tuple[Fraction, ...]
) -> Tuple[Tuple[int, ...], Tuple[Fraction, ...]]:
    used = 0
    for mask, c in enumerate(components):
        if c:
            used |= mask
    if used == (1 << len(radicands)) - 1:
        return radicands, components
    keep = [i for i in range(len(radicands)) if used >> i & 1]
    out = [Fraction(0)] * (1 << len(keep))
    for mask, c in enumerate(components):
        if not c:
            continue
        target = 0
        for position, i in enumerate(keep):
            if mask >> i & 1:
                target |= 1 << position
        out[target] = c
    return tuple(radicands[i] for i in keep), tuple(out)


def sqrt_of_rational(q: RationalLike) -> RadicalScalar:
    """
    Exact square root of a rational inside the radical tower.

    With n = f**2 * dn and d = g**2 * dd, sqrt(n/d) is stored as
    f * sqrt(dn*dd) / (g*dd), so perfect squares come back rational.
    n and d are factored separately; they are coprime, so dn*dd is
    squarefree. Negative q gives a formal root of a negative radicand.
    Zero maps to zero.
    """
    q = Fraction(q)
    if q == 0:
        return RadicalScalar.zero()
    num_root, num_free = squarefree_decomposition(q.numerator)
    den_root, den_free = squarefree_decomposition(q.denominator)
    coefficient = Fraction(num_root, den_root * den_free)
    squarefree = num_free * den_free
    if squarefree == 1:
        return RadicalScalar.rational(coefficient)
    return RadicalScalar._trusted((squarefree,), (Fraction(0), coefficient))


def radical_mul(x: RadicalScalar, y: RadicalScalar) -> RadicalScalar:
    """Exact product in the tower; fails with UnsupportedTowerError past three radicands."""
    return x * y
