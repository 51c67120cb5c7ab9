"""
Renderers for CLI output: text, CSV (header row, comma separated) and
JSON lines. Every function returns the full output as a string.
"""
import csv
import io
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from pydantic import BaseModel

from src.core.exact import format_rational
from src.core.families import FamilySpec, SolutionTuple
from src.core.identities import CubicSeed, FiveCubeSeed, QuadraticFormTuple
from src.data.models import (
    CertificationRecord,
    IdentityRecord,
    RecurrenceSummaryRecord,
    RepresentationRecord,
    SeedRecord,
    SeriesRecord,
    SolutionRecord,
)


def _csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def json_lines(records: Iterable[BaseModel]) -> str:
    return "\n".join(record.model_dump_json() for record in records)


def render_series(function: str, direction: str, values: List[Fraction], fmt: str) -> str:
    if fmt == "json":
        return json_lines([SeriesRecord.from_values(function, direction, values)])
    if fmt == "csv":
        return _csv(["k", "coefficient"], ([str(k), format_rational(v)] for k, v in enumerate(values)))
    return ", ".join(format_rational(v) for v in values)


def family_csv_header(spec: FamilySpec) -> List[str]:
    header = ["n", *spec.labels]
    if spec.residual is not None:
        header.append("residual")
    return header


def render_solutions(spec: FamilySpec, tuples: Sequence[SolutionTuple], fmt: str) -> str:
    """
    Render family tuples. The CSV residual column holds the signed residual
    base (e.g. -9), not its power.
    """
    if fmt == "json":
        return json_lines(SolutionRecord.from_solution(t) for t in tuples)
    if fmt == "csv":
        rows = []
        for t in tuples:
            row = [str(t.index), *(format_rational(x) for x in t.entries)]
            if t.residual is not None:
                row.append(format_rational(t.residual))
            rows.append(row)
        return _csv(family_csv_header(spec), rows)
    return "\n".join(f"n={t.index}: {t.relation_string()}" for t in tuples)


def render_representations(records: Sequence[RepresentationRecord], fmt: str) -> str:
    if fmt == "json":
        return json_lines(records)
    if fmt == "csv":
        return _csv(["n", "a", "b"], ([r.n, str(a), str(b)] for r in records for a, b in r.pairs))
    lines = []
    for record in records:
        if record.pairs:
            shown = " = ".join(f"{_cube(a)} + {_cube(b)}" for a, b in record.pairs)
            lines.append(f"{record.n} = {shown}")
        else:
            lines.append(f"{record.n}: no representation")
    return "\n".join(lines)


def _cube(value: int) -> str:
    return f"({value})^3" if value < 0 else f"{value}^3"


def render_seeds(seeds: Sequence[Union[CubicSeed, FiveCubeSeed]], fmt: str) -> str:
    records = [SeedRecord.from_seed(seed) for seed in seeds]
    if fmt == "json":
        return json_lines(records)
    width = len(records[0].entries) if records else 4
    names = ["p", "q", "r", "s", "t", "u"][:width]
    if fmt == "csv":
        return _csv(names, (record.entries for record in records))
    return "\n".join(",".join(record.entries) for record in records)


def render_certification(record: CertificationRecord, fmt: str) -> str:
    if fmt == "json":
        return json_lines([record])
    if fmt == "csv":
        return _csv(
            ["identity", "verdict", "monomials_checked"],
            [[record.identity, record.verdict, str(record.monomials_checked)]],
        )
    lines = [f"{record.verdict} {record.identity} (monomials checked: {record.monomials_checked})"]
    for i, form in enumerate(record.forms or [], start=1):
        lines.append(f"  F{i} = {form}")
    return "\n".join(lines)


def render_recurrence(record: RecurrenceSummaryRecord, fmt: str) -> str:
    if fmt == "json":
        return json_lines([record])
    if fmt == "csv":
        return _csv(["n", "w", "casoratian"], ([str(n), w, c] for n, (w, c) in enumerate(zip(record.terms, record.casoratians))))
    rec = record.recurrence
    return "\n".join(
        [
            f"w(n+2) = {rec.c1}*w(n+1) + {rec.c2}*w(n), w(0) = {rec.w0}, w(1) = {rec.w1}",
            "terms: " + ", ".join(record.terms),
            "casoratian: " + ", ".join(record.casoratians),
            f"sum w(n)^2 x^n = {record.square_ogf}",
            f"sum w(n)w(n+1) x^n = {record.cross_ogf}",
        ]
    )


def render_identity(t: QuadraticFormTuple, fmt: str) -> str:
    if fmt == "json":
        return json_lines([IdentityRecord.from_tuple(t)])
    strings = t.form_strings()
    if fmt == "csv":
        return _csv(["index", "side", "form"], ([str(i), "lhs" if i in t.lhs else "rhs", s] for i, s in enumerate(strings)))
    lines = [f"{t.name}: {', '.join(t.variables)}; exponent {t.exponent}"]
    lines.extend(f"  F{i} = {s}" for i, s in enumerate(strings, start=1))
    lines.append(f"  {t}")
    return "\n".join(lines)
