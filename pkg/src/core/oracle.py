"""
Brute-force oracle: sums of two cubes, taxicab numbers, seed searches and
raw relation checks.

Nothing here uses the generating functions or quadratic forms, so the
oracle is an independent check of the families and identities.

Pair sums are computed with numpy int64 arrays while 2*bound**3 fits in 64
bits and with object arrays of Python ints beyond that. The taxicab search
splits the first coordinate into contiguous ranges that worker processes
reduce to (value, count) tables; the merge sorts, so the result does not
depend on the worker count.
"""
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config.constants import MSG_CHUNK_DONE, MSG_SEARCH_STARTED
from src.core.exact import RationalLike
from src.core.exceptions import InsufficientBoundError, PreconditionError
from src.core.families import SolutionTuple
from src.core.identities import CubicSeed, FiveCubeSeed
from src.utils.logging import get_logger

logger = get_logger("oracle")

INT64_MAX = int(np.iinfo(np.int64).max)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CubeTableEntry:
    """value = a^3 + b^3 with a <= b."""

    value: int
    pair: Pair

    def __post_init__(self) -> None:
        a, b = self.pair
        if a > b:
            raise PreconditionError(f"pair {self.pair} is not canonical (a <= b)")
        if a ** 3 + b ** 3 != self.value:
            raise PreconditionError(f"{a}^3 + {b}^3 != {self.value}")


@dataclass(frozen=True)
class TaxicabResult:
    """Smallest value with at least k representations, with all of them."""

    value: int
    k: int
    bound: int
    pairs: Tuple[Pair, ...]

    def entries(self) -> List[CubeTableEntry]:
        return [CubeTableEntry(self.value, pair) for pair in self.pairs]


def _fits_int64(magnitude: int) -> bool:
    return magnitude <= INT64_MAX


def _base_array(lo: int, hi: int, exact: bool) -> np.ndarray:
    if exact:
        return np.array(list(range(lo, hi + 1)), dtype=object)
    return np.arange(lo, hi + 1, dtype=np.int64)


def _icbrt(n: int) -> int:
    """Largest x >= 0 with x**3 <= n."""
    if n <= 0:
        return 0
    x = int(round(n ** (1.0 / 3.0)))
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def two_cube_representations(n: int, bound: int, allow_negative: bool = False) -> List[Pair]:
    """
    All (a, b) with a <= b, a^3 + b^3 = n and |a|, |b| <= bound.

    The sorted cube table is probed once per base with n - a^3.

    Args:
        n: Target value
        bound: Largest base magnitude
        allow_negative: Admit bases in [-bound, bound] instead of [1, bound]

    Returns:
        Pairs sorted by first element
    """
    if bound < 1:
        raise PreconditionError(f"bound must be positive, got {bound}")
    lo = -bound if allow_negative else 1
    exact = not _fits_int64(abs(n) + bound ** 3)
    bases = _base_array(lo, bound, exact)
    cubes = bases ** 3
    complements = n - cubes
    positions = np.minimum(np.searchsorted(cubes, complements), len(cubes) - 1)
    hits = np.asarray(cubes[positions] == complements, dtype=bool)
    pairs = []
    for i in np.nonzero(hits)[0]:
        a, b = int(bases[i]), int(bases[positions[i]])
        if a <= b:
            pairs.append((a, b))
    return sorted(pairs)


def _pair_sum_counts(a_lo: int, a_hi: int, bound: int, limit: int, exact: bool) -> Tuple[np.ndarray, np.ndarray]:
    """Distinct values a^3 + b^3 <= limit for a in [a_lo, a_hi], a <= b <= bound, with multiplicities."""
    cubes = _base_array(1, bound, exact) ** 3
    rows = []
    for a in range(a_lo, a_hi + 1):
        row = cubes[a - 1] + cubes[a - 1:]
        stop = int(np.searchsorted(row, limit, side="right"))
        if stop == 0:
            break
        rows.append(row[:stop])
    if not rows:
        return np.empty(0, dtype=object if exact else np.int64), np.empty(0, dtype=np.int64)
    values, counts = np.unique(np.concatenate(rows), return_counts=True)
    return values, counts.astype(np.int64)


def _partition(a_max: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, a_max))
    edges = np.linspace(1, a_max + 1, parts + 1).astype(int)
    return [(int(lo), int(hi) - 1) for lo, hi in zip(edges[:-1], edges[1:]) if hi > lo]


def _merge(partials: Sequence[Tuple[np.ndarray, np.ndarray]]) -> Tuple[np.ndarray, np.ndarray]:
    values = np.concatenate([v for v, _ in partials])
    counts = np.concatenate([c for _, c in partials])
    if values.size == 0:
        return values, counts
    unique, inverse = np.unique(values, return_inverse=True)
    totals = np.zeros(len(unique), dtype=np.int64)
    np.add.at(totals, np.asarray(inverse).ravel(), counts)
    return unique, totals


def find_taxicab(k: int, bound: int, workers: int = 1, chunks_per_worker: int = 4) -> TaxicabResult:
    """
    Smallest N with at least k representations as a sum of two positive cubes.

    Only values N <= bound^3 are considered: for those every representation
    has both bases within bound, so counts are complete and the minimum is
    certified.

    Raises:
        InsufficientBoundError: if no value up to bound^3 has k representations
    """
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if bound < 1:
        raise PreconditionError(f"bound must be positive, got {bound}")
    if workers < 1:
        raise PreconditionError(f"workers must be positive, got {workers}")
    limit = bound ** 3
    exact = not _fits_int64(2 * limit)
    a_max = min(bound, _icbrt(limit // 2))
    chunks = _partition(a_max, workers * chunks_per_worker)
    if not chunks:
        raise InsufficientBoundError(f"bound {bound} admits no pair sum up to {limit}; increase the bound")
    logger.info(MSG_SEARCH_STARTED.format(limit=limit, bound=bound, workers=workers, chunks=len(chunks)))

    started = time.perf_counter()
    args = [(lo, hi, bound, limit, exact) for lo, hi in chunks]
    if workers == 1 or len(chunks) == 1:
        partials = [_pair_sum_counts(*arg) for arg in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(_pair_sum_counts, *zip(*args)))
    for (lo, hi), (values, _) in zip(chunks, partials):
        logger.debug(MSG_CHUNK_DONE.format(lo=lo, hi=hi, count=len(values)))

    values, counts = _merge(partials)
    logger.debug(f"Merged {len(values)} distinct sums in {time.perf_counter() - started:.3f}s")
    hits = np.nonzero(counts >= k)[0]
    if len(hits) == 0:
        raise InsufficientBoundError(
            f"no value up to {limit} has {k} representation(s) with bases <= {bound}; increase the bound"
        )
    value = int(values[hits[0]])
    return TaxicabResult(value=value, k=k, bound=bound, pairs=tuple(two_cube_representations(value, bound)))


def smallest_with_k_representations(k: int, bound: int, workers: int = 1) -> int:
    """Smallest N with >= k positive two-cube representations, certified within bound."""
    return find_taxicab(k, bound, workers).value


def verify_power_relation(
    lhs: Sequence[RationalLike],
    rhs: Sequence[RationalLike],
    exponent: int,
    residual: Optional[RationalLike] = None,
    residual_sign: int = 1,
) -> bool:
    """sum(lhs^e) == sum(rhs^e) + residual_sign * residual^e, exactly."""
    left = sum((Fraction(x) ** exponent for x in lhs), Fraction(0))
    right = sum((Fraction(x) ** exponent for x in rhs), Fraction(0))
    if residual is not None:
        right += residual_sign * Fraction(residual) ** exponent
    return left == right


def verify_relation(t: SolutionTuple) -> bool:
    """Recompute a tuple's relation from its raw entries."""
    return verify_power_relation(
        [t.entries[i] for i in t.lhs],
        [t.entries[j] for j in t.rhs],
        t.exponent,
        t.residual,
        t.residual_sign,
    )


def seed_search_three_cubes(bound: int) -> List[CubicSeed]:
    """Positive p <= q <= r < s <= bound with p^3 + q^3 + r^3 = s^3, sorted by s then (p, q, r)."""
    if bound < 1:
        raise PreconditionError(f"bound must be positive, got {bound}")
    roots = {x ** 3: x for x in range(1, bound + 1)}
    found = []
    for p in range(1, bound + 1):
        for q in range(p, bound + 1):
            for r in range(q, bound + 1):
                s = roots.get(p ** 3 + q ** 3 + r ** 3)
                if s is not None:
                    found.append((s, p, q, r))
    found.sort()
    return [CubicSeed(p, q, r, s) for s, p, q, r in found]


def seed_search_five_cubes(bound: int) -> List[FiveCubeSeed]:
    """
    Integer (p, q, r, s, t, u) with entries in [-bound, bound],
    p^3 + q^3 + r^3 + s^3 + t^3 = u^3 and p+s, q+t, r-u nonzero.

    Triples (p, q, r) are tabled by cube sum and matched against u^3 - s^3 - t^3.
    """
    if bound < 1:
        raise PreconditionError(f"bound must be positive, got {bound}")
    span = range(-bound, bound + 1)
    table: Dict[int, List[Tuple[int, int, int]]] = defaultdict(list)
    for p in span:
        for q in span:
            for r in span:
                table[p ** 3 + q ** 3 + r ** 3].append((p, q, r))
    found = []
    for s in span:
        for t in span:
            for u in span:
                for p, q, r in table.get(u ** 3 - s ** 3 - t ** 3, ()):
                    if p + s != 0 and q + t != 0 and r - u != 0:
                        found.append((p, q, r, s, t, u))
    found.sort()
    logger.info(f"✓ five-cube seed search, bound {bound}: {len(found)} seed(s)")
    return [FiveCubeSeed(*entries) for entries in found]
