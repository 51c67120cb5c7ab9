"""
Command-line interface for taxicab-forge.

Usage:
    taxicab-forge expand "(1+53x+9x^2)/(1-82x-82x^2+x^3)" --count 3 --taylor
    taxicab-forge family thm2.5 --n-max 1
    taxicab-forge family thm2.5-laurent --n-max 0 --clear-base 9
    taxicab-forge certify euler --seed 3,4,5,6
    taxicab-forge taxicab 2 20
    taxicab-forge seeds three 50

Results go to standard output; logs and error messages go to standard error.
"""
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

import click
from pydantic import ValidationError

from src import __version__
from src.config import Config, get_config
from src.config.constants import (
    ERROR_SEED_NOT_ALLOWED,
    ERROR_SEED_REQUIRED,
    EXIT_CERTIFICATION_FAILED,
    EXIT_PRECONDITION,
    LOG_LEVELS,
    OUTPUT_FORMATS,
    VERDICT_CERTIFIED,
    VERDICT_FAILED,
)
from src.core.exceptions import ParseError
from src.core.families import builtin_families, clear_denominators, family_names, generate, get_family
from src.core.identities import (
    CubicSeed,
    FiveCubeSeed,
    QuadraticFormTuple,
    builtin_identities,
    certification_report,
    chord_forms,
    euler_forms,
    five_cube_chord_forms,
    five_cube_forms,
    get_identity,
    parse_seed,
)
from src.core.oracle import (
    find_taxicab,
    seed_search_five_cubes,
    seed_search_three_cubes,
    two_cube_representations,
)
from src.core.recurrences import LinearRecurrence2
from src.core.series import RationalFunction
from src.data.export import (
    render_certification,
    render_identity,
    render_recurrence,
    render_representations,
    render_seeds,
    render_series,
    render_solutions,
)
from src.data.models import (
    CertificationRecord,
    IdentityRecord,
    RecurrenceSummaryRecord,
    RepresentationRecord,
)
from src.utils.error_handlers import handle_cli_errors
from src.utils.logging import setup_logger

__all__ = [
    "cli",
]

# construction name -> (seed type, form builder)
SEEDED_CONSTRUCTIONS: Dict[str, Tuple[type, Callable[..., QuadraticFormTuple]]] = {
    "euler": (CubicSeed, euler_forms),
    "chord": (CubicSeed, chord_forms),
    "five-cube": (FiveCubeSeed, five_cube_forms),
    "five-cube-chord": (FiveCubeSeed, five_cube_chord_forms),
}

IDENTITY_NAMES = [*builtin_identities(), *SEEDED_CONSTRUCTIONS]


def format_option(func: Callable) -> Callable:
    """--format text|csv|json; the default comes from TAXICAB_FORGE_FORMAT."""
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
        default=None,
        help="Output format (default: TAXICAB_FORGE_FORMAT or text)",
    )(func)


def _fmt(settings: Config, fmt: Optional[str]) -> str:
    return (fmt or settings.output.default_format).lower()


def resolve_identity(name: str, seed: Optional[str]) -> QuadraticFormTuple:
    """
    Build the identity a command refers to.

    Fixed identities take no seed; seeded constructions need one, and the
    seed is checked against its cube relation before any form is built.
    """
    if name in SEEDED_CONSTRUCTIONS:
        if seed is None:
            raise click.UsageError(ERROR_SEED_REQUIRED.format(name=name))
        seed_type, build = SEEDED_CONSTRUCTIONS[name]
        return build(seed_type.of(parse_seed(seed)))
    if seed is not None:
        raise click.UsageError(ERROR_SEED_NOT_ALLOWED.format(name=name))
    return get_identity(name)


def load_identity(path: Path) -> QuadraticFormTuple:
    """Read an identity written by `identity --format json`."""
    try:
        record = IdentityRecord.model_validate_json(path.read_text(encoding="utf-8").strip())
    except ValidationError as e:
        raise ParseError(f"{path} is not an identity record: {e.error_count()} validation error(s)") from None
    return record.to_tuple()


@click.group()
@click.version_option(version=__version__, prog_name="taxicab-forge")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Log level for standard error (default: TAXICAB_FORGE_LOG_LEVEL or WARNING)",
)
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """
    Generate, expand and certify solution families of
    A^3 + B^3 = C^3 + D^3 and A^4 + B^4 + C^4 + D^4 + E^4 = F^4.
    """
    try:
        settings = get_config()
    except ValueError as e:
        click.echo(f"✗ {e}", err=True)
        ctx.exit(EXIT_PRECONDITION)
    is_valid, error = settings.validate()
    if not is_valid:
        click.echo(f"✗ {error}", err=True)
        ctx.exit(EXIT_PRECONDITION)
    setup_logger(level=(log_level or settings.logging.level).upper(), log_file=settings.logging.log_file)
    ctx.obj = settings


@cli.command()
@click.argument("function")
@click.option("--count", type=click.IntRange(min=0), required=True, help="Number of coefficients")
@click.option("--taylor/--laurent", "taylor", default=True, help="Expand at x = 0 or at infinity")
@format_option
@click.pass_obj
@handle_cli_errors()
def expand(settings: Config, function: str, count: int, taylor: bool, fmt: Optional[str]):
    """Expand a rational function such as "(1+53x+9x^2)/(1-82x-82x^2+x^3)"."""
    rf = RationalFunction.parse(function)
    if taylor:
        values = rf.taylor_coeffs(count)
    else:
        values = rf.laurent_coeffs_at_infinity(count)
    click.echo(render_series(function, "taylor" if taylor else "laurent", values, _fmt(settings, fmt)))


@cli.command()
@click.argument("name", type=click.Choice(family_names()))
@click.option("--n-max", type=int, required=True, help="Largest index generated")
@click.option("--clear-base", type=int, default=None, help="Scale each tuple by the least power of this base")
@format_option
@click.pass_obj
@handle_cli_errors()
def family(settings: Config, name: str, n_max: int, clear_base: Optional[int], fmt: Optional[str]):
    """Emit the verified tuples n = 0..N-MAX of a built-in family."""
    spec = get_family(name)
    tuples = generate(spec, n_max)
    if clear_base is not None:
        tuples = [clear_denominators(t, clear_base, settings.family.clear_cap) for t in tuples]
    click.echo(render_solutions(spec, tuples, _fmt(settings, fmt)))


@cli.command(name="list")
@handle_cli_errors()
def list_names():
    """List the built-in families and identities."""
    for spec in builtin_families():
        click.echo(f"{spec.name:<16} {spec.direction.value:<8} {spec.description or spec.relation_template()}")
    for name in IDENTITY_NAMES:
        click.echo(f"{name:<16} identity")


@cli.command()
@click.argument("name", type=click.Choice(IDENTITY_NAMES))
@click.option("--seed", default=None, help="Seed literal such as 3,4,5,6")
@format_option
@click.pass_obj
@handle_cli_errors()
def identity(settings: Config, name: str, seed: Optional[str], fmt: Optional[str]):
    """Print the quadratic forms of an identity; json output feeds certify --from-file."""
    click.echo(render_identity(resolve_identity(name, seed), _fmt(settings, fmt)))


@cli.command()
@click.argument("name", type=click.Choice(IDENTITY_NAMES), required=False)
@click.option("--seed", default=None, help="Seed literal such as 3,4,5,6")
@click.option(
    "--from-file",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Certify an identity record read from a JSON file",
)
@format_option
@click.pass_obj
@handle_cli_errors()
def certify(settings: Config, name: Optional[str], seed: Optional[str], from_file: Optional[Path], fmt: Optional[str]):
    """
    Certify an identity by full symbolic expansion.

    Prints CERTIFIED or FAILED and the number of monomials checked; a
    FAILED verdict exits with code 5.
    """
    if from_file is not None:
        if name is not None or seed is not None:
            raise click.UsageError("--from-file cannot be combined with NAME or --seed")
        t = load_identity(from_file)
    elif name is None:
        raise click.UsageError("give an identity NAME or --from-file")
    else:
        t = resolve_identity(name, seed)

    report = certification_report(t)
    verdict = VERDICT_CERTIFIED if report.certified else VERDICT_FAILED
    record = CertificationRecord.from_report(report, verdict, t.form_strings())
    click.echo(render_certification(record, _fmt(settings, fmt)))
    if not report.certified:
        raise SystemExit(EXIT_CERTIFICATION_FAILED)


@cli.command()
@click.argument("k", type=int)
@click.argument("bound", type=int)
@click.option("--workers", type=int, default=1, help="Worker processes (TAXICAB_FORGE_WORKERS overrides)")
@format_option
@click.pass_obj
@handle_cli_errors()
def taxicab(settings: Config, k: int, bound: int, workers: int, fmt: Optional[str]):
    """Smallest N with K representations as a sum of two positive cubes up to BOUND."""
    result = find_taxicab(k, bound, settings.resolve_workers(workers), settings.oracle.chunks_per_worker)
    click.echo(render_representations([RepresentationRecord.from_result(result)], _fmt(settings, fmt)))


@cli.command()
@click.argument("n", type=int)
@click.option("--bound", type=int, required=True, help="Largest base magnitude")
@click.option("--allow-negative", is_flag=True, help="Admit negative bases")
@format_option
@click.pass_obj
@handle_cli_errors()
def represent(settings: Config, n: int, bound: int, allow_negative: bool, fmt: Optional[str]):
    """All ways of writing N as a^3 + b^3 with bases up to BOUND."""
    pairs = two_cube_representations(n, bound, allow_negative)
    click.echo(render_representations([RepresentationRecord.from_pairs(n, pairs)], _fmt(settings, fmt)))


@cli.command()
@click.argument("kind", type=click.Choice(["three", "five"]))
@click.argument("bound", type=int)
@format_option
@click.pass_obj
@handle_cli_errors()
def seeds(settings: Config, kind: str, bound: int, fmt: Optional[str]):
    """Seeds of p^3+q^3+r^3 = s^3 (three) or of five cubes summing to a cube (five)."""
    found = seed_search_three_cubes(bound) if kind == "three" else seed_search_five_cubes(bound)
    click.echo(render_seeds(found, _fmt(settings, fmt)))


@cli.command()
@click.option("--c1", type=int, required=True, help="Coefficient of w(n+1)")
@click.option("--c2", type=int, required=True, help="Coefficient of w(n)")
@click.option("--w0", type=int, default=0, show_default=True)
@click.option("--w1", type=int, default=1, show_default=True)
@click.option("--count", type=click.IntRange(min=0), default=10, show_default=True)
@format_option
@click.pass_obj
@handle_cli_errors()
def recurrence(settings: Config, c1: int, c2: int, w0: int, w1: int, count: int, fmt: Optional[str]):
    """Terms, Casoratian values and quadratic generating functions of w(n+2) = c1 w(n+1) + c2 w(n)."""
    record = RecurrenceSummaryRecord.from_recurrence(LinearRecurrence2(c1, c2, w0, w1), count)
    click.echo(render_recurrence(record, _fmt(settings, fmt)))


if __name__ == "__main__":
    cli()
