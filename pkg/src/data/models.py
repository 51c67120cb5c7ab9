"""Pydantic wire records for CLI output and round-tripping"""
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field

from src.core.exact import RadicalScalar, format_rational, parse_integer, parse_rational
from src.core.families import SolutionTuple
from src.core.identities import (
    CertificationReport,
    CubicSeed,
    FiveCubeSeed,
    MultiPoly,
    QuadraticFormTuple,
)
from src.core.oracle import TaxicabResult
from src.core.recurrences import LinearRecurrence2


class SeriesRecord(BaseModel):
    """Expansion coefficients of a rational function"""
    function: str = Field(..., description="Rational function literal")
    direction: str = Field(..., description="'taylor' or 'laurent'")
    coefficients: List[str] = Field(..., description="Exact coefficients as decimal or num/den strings")

    @classmethod
    def from_values(cls, function: str, direction: str, values: List[Fraction]) -> "SeriesRecord":
        return cls(function=function, direction=direction, coefficients=[format_rational(v) for v in values])

    def to_values(self) -> List[Fraction]:
        return [parse_rational(c) for c in self.coefficients]


class RecurrenceRecord(BaseModel):
    """Order-2 recurrence w(n+2) = c1*w(n+1) + c2*w(n)"""
    c1: str = Field(..., description="Coefficient of w(n+1)")
    c2: str = Field(..., description="Coefficient of w(n)")
    w0: str = Field(..., description="Initial value w(0)")
    w1: str = Field(..., description="Initial value w(1)")

    @classmethod
    def from_recurrence(cls, rec: LinearRecurrence2) -> "RecurrenceRecord":
        return cls(c1=str(rec.c1), c2=str(rec.c2), w0=str(rec.w0), w1=str(rec.w1))

    def to_recurrence(self) -> LinearRecurrence2:
        return LinearRecurrence2(
            parse_integer(self.c1), parse_integer(self.c2), parse_integer(self.w0), parse_integer(self.w1)
        )


class RadicalRecord(BaseModel):
    """RadicalScalar as its tower and component array"""
    radicands: List[str] = Field(default_factory=list, description="Squarefree radicands, sorted")
    components: List[str] = Field(..., description="2^k rational components indexed by radicand subsets")

    @classmethod
    def from_scalar(cls, value: RadicalScalar) -> "RadicalRecord":
        return cls(
            radicands=[str(d) for d in value.radicands],
            components=[format_rational(c) for c in value.components],
        )

    def to_scalar(self) -> RadicalScalar:
        return RadicalScalar(
            tuple(parse_integer(d) for d in self.radicands),
            tuple(parse_rational(c) for c in self.components),
        )


class MonomialRecord(BaseModel):
    """One monomial of a form"""
    exponents: List[int] = Field(..., description="Exponent of each declared variable")
    coefficient: RadicalRecord


class FormRecord(BaseModel):
    """A quadratic form as its monomials"""
    text: str = Field(..., description="Human-readable form")
    monomials: List[MonomialRecord]


class IdentityRecord(BaseModel):
    """A QuadraticFormTuple"""
    name: str
    variables: List[str]
    exponent: int
    lhs: List[int] = Field(..., description="Indices of forms summed on the left")
    rhs: List[int] = Field(..., description="Indices of forms summed on the right")
    forms: List[FormRecord]

    @classmethod
    def from_tuple(cls, t: QuadraticFormTuple) -> "IdentityRecord":
        forms = []
        for form in t.forms:
            monomials = [
                MonomialRecord(exponents=list(exponents), coefficient=RadicalRecord.from_scalar(coefficient))
                for exponents, coefficient in form.sorted_terms()
            ]
            forms.append(FormRecord(text=form.to_string(t.variables), monomials=monomials))
        return cls(
            name=t.name,
            variables=list(t.variables),
            exponent=t.exponent,
            lhs=list(t.lhs),
            rhs=list(t.rhs),
            forms=forms,
        )

    def to_tuple(self) -> QuadraticFormTuple:
        nvars = len(self.variables)
        forms = tuple(
            MultiPoly(nvars, {tuple(m.exponents): m.coefficient.to_scalar() for m in form.monomials})
            for form in self.forms
        )
        return QuadraticFormTuple(self.name, tuple(self.variables), forms, tuple(self.lhs), tuple(self.rhs), self.exponent)


class CertificationRecord(BaseModel):
    """Verdict of an identity certification"""
    identity: str
    verdict: str = Field(..., description="CERTIFIED or FAILED")
    monomials_checked: int = Field(..., description="Distinct monomials in the expanded sides")
    nonzero_coefficients: int = Field(0, description="Nonzero coefficients of the expanded difference")
    forms: Optional[List[str]] = Field(None, description="The certified forms")

    @classmethod
    def from_report(cls, report: CertificationReport, verdict: str, forms: Optional[List[str]] = None) -> "CertificationRecord":
        return cls(
            identity=report.name,
            verdict=verdict,
            monomials_checked=report.monomials_checked,
            nonzero_coefficients=report.nonzero_coefficients,
            forms=forms,
        )


class SolutionRecord(BaseModel):
    """A verified SolutionTuple"""
    family: str
    n: int = Field(..., description="Index in the family")
    entries: List[str] = Field(..., description="Tuple entries, exact")
    exponent: int
    lhs: List[int]
    rhs: List[int]
    residual: Optional[str] = Field(None, description="Signed residual base, not its power")
    residual_sign: int = Field(1, description="+1 if the residual power is added on the right, -1 if subtracted")

    @classmethod
    def from_solution(cls, t: SolutionTuple) -> "SolutionRecord":
        return cls(
            family=t.family,
            n=t.index,
            entries=[format_rational(x) for x in t.entries],
            exponent=t.exponent,
            lhs=list(t.lhs),
            rhs=list(t.rhs),
            residual=None if t.residual is None else format_rational(t.residual),
            residual_sign=t.residual_sign,
        )

    def to_solution(self) -> SolutionTuple:
        return SolutionTuple(
            index=self.n,
            entries=tuple(parse_rational(x) for x in self.entries),
            exponent=self.exponent,
            lhs=tuple(self.lhs),
            rhs=tuple(self.rhs),
            residual=None if self.residual is None else parse_rational(self.residual),
            residual_sign=self.residual_sign,
            family=self.family,
        )


class RepresentationRecord(BaseModel):
    """Two-cube representations of one value"""
    n: str = Field(..., description="The represented value")
    pairs: List[List[int]] = Field(..., description="Pairs [a, b] with a <= b")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "RepresentationRecord":
        return cls(n=str(n), pairs=[[a, b] for a, b in pairs])

    @classmethod
    def from_result(cls, result: TaxicabResult) -> "RepresentationRecord":
        return cls.from_pairs(result.value, result.pairs)


class SeedRecord(BaseModel):
    """A cubic or five-cube seed"""
    kind: str = Field(..., description="'three' or 'five'")
    entries: List[str]

    @classmethod
    def from_seed(cls, seed) -> "SeedRecord":
        kind = "three" if isinstance(seed, CubicSeed) else "five"
        return cls(kind=kind, entries=[format_rational(x) for x in seed.entries])

    def to_seed(self):
        values = [parse_rational(x) for x in self.entries]
        if self.kind == "three":
            return CubicSeed.of(values)
        return FiveCubeSeed.of(values)


class RecurrenceSummaryRecord(BaseModel):
    """Terms, Casoratian values and quadratic generating functions of a recurrence"""
    recurrence: RecurrenceRecord
    terms: List[str] = Field(..., description="w(0) .. w(count-1)")
    casoratians: List[str] = Field(..., description="w(n+1)^2 - w(n)w(n+2) for n < count")
    square_ogf: str = Field(..., description="Generating function of w(n)^2")
    cross_ogf: str = Field(..., description="Generating function of w(n)w(n+1)")

    @classmethod
    def from_recurrence(cls, rec: LinearRecurrence2, count: int) -> "RecurrenceSummaryRecord":
        return cls(
            recurrence=RecurrenceRecord.from_recurrence(rec),
            terms=[str(w) for w in rec.terms(count)],
            casoratians=[str(rec.casoratian(n)) for n in range(count)],
            square_ogf=str(rec.square_ogf()),
            cross_ogf=str(rec.cross_ogf()),
        )
