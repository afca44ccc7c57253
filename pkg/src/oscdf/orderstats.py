"""Joint CDF of a subset of order statistics, by four exact strategies.

All strategies sum over the same index vectors (see ``combinatorics``); they
differ in the per-term probability:

- ``cdf_bapat_beg`` evaluates the Bapat-Beg block-permanent form. It accepts
  an arbitrary distribution per variable but pays one Ryser permanent per
  term, so it serves as the honest exponential baseline.
- ``cdf_single_population`` uses the classical multinomial form when every
  variable shares one distribution; polynomial work per term.
- ``cdf_two_populations`` expands each block permanent over the number of
  first-population variables in each threshold interval, turning the
  permanent into a sum of products of two multinomial coefficients.
- ``cdf_multi_population`` generalizes that expansion to one count per
  (interval, population) cell.

Each term's combinatorial coefficient is an exact integer (Python's unbounded
ints), converted to float once at the final division/multiplication; the term
sums themselves use Neumaier-compensated accumulation in a deterministic
enumeration order, so results are reproducible bit-for-bit across runs.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import (
    enumerate_allocation_matrices,
    enumerate_allocation_vectors,
    enumerate_index_vectors,
)
from .compensated import CompensatedSum
from .distributions import DistributionSpec
from .errors import SizeCapError
from .permanent import RYSER_CAP, interval_probabilities, permanent_ryser
from .queries import OrderStatQuery, PopulationLayout

OUTPUT_SLACK = 1e-9

# Module-level seam so tests can inject a corrupted factorial (negative control).
_factorial = math.factorial


@dataclass(frozen=True)
class EvalResult:
    """Evaluated probability plus instrumentation for complexity checks."""

    value: float
    term_count: int
    algorithm: str


def _finish(raw: float) -> float:
    if raw < -OUTPUT_SLACK or raw > 1.0 + OUTPUT_SLACK:
        raise ArithmeticError(
            f"computed probability {raw!r} lies outside [0, 1] beyond the {OUTPUT_SLACK} slack"
        )
    return min(1.0, max(0.0, raw))


def _gaps(ivec: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b - a for a, b in zip(ivec, ivec[1:]))


def cdf_bapat_beg(
    query: OrderStatQuery, dists: Sequence[DistributionSpec], parallel: bool = False
) -> EvalResult:
    """General formula: one block permanent per index vector, any distributions.

    With ``parallel=True`` the index stream is split across worker processes;
    partial sums are combined in a fixed order, so the result can differ from
    the sequential default only in the last couple of bits.
    """
    dists = tuple(dists)
    if len(dists) != query.m:
        raise ValueError(f"expected {query.m} distributions, got {len(dists)}")
    if query.m > RYSER_CAP:
        raise SizeCapError("general-formula evaluation (one Ryser permanent per term)", query.m, RYSER_CAP)
    if parallel:
        return _bapat_beg_parallel(query, dists)
    acc = CompensatedSum()
    terms = 0
    for value in _bapat_beg_terms(query, dists):
        acc.add(value)
        terms += 1
    return EvalResult(_finish(acc.value), terms, "bapat_beg")


def _bapat_beg_terms(query: OrderStatQuery, dists: tuple[DistributionSpec, ...]):
    deltas = interval_probabilities(query.thresholds, dists)
    for ivec in enumerate_index_vectors(query.indices, query.m):
        rows: list[tuple[float, ...]] = []
        denom = 1
        for j, delta_row in enumerate(deltas):
            height = ivec[j + 1] - ivec[j]
            rows.extend([delta_row] * height)
            denom *= _factorial(height)
        yield permanent_ryser(rows) / denom


def _bb_chunk(payload) -> tuple[float, int]:
    query, dists, chunk = payload
    deltas = interval_probabilities(query.thresholds, dists)
    acc = CompensatedSum()
    for ivec in chunk:
        rows: list[tuple[float, ...]] = []
        denom = 1
        for j, delta_row in enumerate(deltas):
            height = ivec[j + 1] - ivec[j]
            rows.extend([delta_row] * height)
            denom *= _factorial(height)
        acc.add(permanent_ryser(rows) / denom)
    return acc.value, len(chunk)


def _bapat_beg_parallel(query: OrderStatQuery, dists: tuple[DistributionSpec, ...]) -> EvalResult:
    ivecs = list(enumerate_index_vectors(query.indices, query.m))
    workers = min(os.cpu_count() or 1, len(ivecs))
    if workers <= 1:
        return cdf_bapat_beg(query, dists, parallel=False)
    step = -(-len(ivecs) // workers)
    chunks = [ivecs[i : i + step] for i in range(0, len(ivecs), step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(_bb_chunk, [(query, dists, c) for c in chunks]))
    acc = CompensatedSum()
    terms = 0
    for value, count in partials:
        acc.add(value)
        terms += count
    return EvalResult(_finish(acc.value), terms, "bapat_beg")


def cdf_single_population(query: OrderStatQuery, dist: DistributionSpec) -> EvalResult:
    """Multinomial form for m variables sharing one distribution."""
    deltas = [row[0] for row in interval_probabilities(query.thresholds, [dist])]
    m_fact = _factorial(query.m)
    acc = CompensatedSum()
    terms = 0
    for ivec in enumerate_index_vectors(query.indices, query.m):
        denom = 1
        prod = 1.0
        for j, delta in enumerate(deltas):
            height = ivec[j + 1] - ivec[j]
            denom *= _factorial(height)
            prod *= delta**height  # 0**0 == 1 covers tied thresholds
        acc.add((m_fact // denom) * prod)
        terms += 1
    return EvalResult(_finish(acc.value), terms, "single_pop")


def cdf_two_populations(
    query: OrderStatQuery, f: DistributionSpec, g: DistributionSpec, n: int
) -> EvalResult:
    """Two populations: the first n variables follow f, the other m - n follow g.

    Each index-vector term expands over the ways to place the n
    first-population variables into the threshold intervals; the coefficient
    n! (m-n)! / prod_j(lambda_j! (gap_j - lambda_j)!) is applied once per
    (index vector, placement) pair.
    """
    n = int(n)
    m = query.m
    if not 0 <= n <= m:
        raise ValueError(f"n must lie in 0..{m}, got {n}")
    if n == 0:
        base = cdf_single_population(query, g)
        return EvalResult(base.value, base.term_count, "two_pop")
    if n == m:
        base = cdf_single_population(query, f)
        return EvalResult(base.value, base.term_count, "two_pop")
    df = [row[0] for row in interval_probabilities(query.thresholds, [f])]
    dg = [row[0] for row in interval_probabilities(query.thresholds, [g])]
    numer = _factorial(n) * _factorial(m - n)
    acc = CompensatedSum()
    terms = 0
    for ivec in enumerate_index_vectors(query.indices, m):
        gaps = _gaps(ivec)
        for lam in enumerate_allocation_vectors(ivec, n):
            denom = 1
            prod = 1.0
            for j, gap in enumerate(gaps):
                lj = lam[j]
                rj = gap - lj
                denom *= _factorial(lj) * _factorial(rj)
                prod *= df[j] ** lj * dg[j] ** rj
            acc.add((numer // denom) * prod)
            terms += 1
    return EvalResult(_finish(acc.value), terms, "two_pop")


def cdf_multi_population(query: OrderStatQuery, layout: PopulationLayout) -> EvalResult:
    """N populations: one placement count per (interval, population) cell.

    The product of the group-size factorials is applied once per (index
    vector, allocation matrix) pair.
    """
    if layout.total != query.m:
        raise ValueError(f"population sizes total {layout.total}, but the query has m={query.m}")
    sizes = layout.sizes
    deltas = [
        [row[0] for row in interval_probabilities(query.thresholds, [g.dist])]
        for g in layout.groups
    ]
    numer = 1
    for size in sizes:
        numer *= _factorial(size)
    acc = CompensatedSum()
    terms = 0
    for ivec in enumerate_index_vectors(query.indices, query.m):
        for mat in enumerate_allocation_matrices(ivec, sizes):
            denom = 1
            prod = 1.0
            for j, row in enumerate(mat):
                for s, lam in enumerate(row):
                    denom *= _factorial(lam)
                    prod *= deltas[s][j] ** lam
            acc.add((numer // denom) * prod)
            terms += 1
    return EvalResult(_finish(acc.value), terms, "multi_pop")


def cdf_auto(query: OrderStatQuery, layout: PopulationLayout, parallel: bool = False) -> EvalResult:
    """Pick a strategy from the layout: 1 group -> single, 2 -> two-population,
    all-singleton groups -> general formula, anything else -> multi-population."""
    groups = layout.groups
    if len(groups) == 1:
        return cdf_single_population(query, groups[0].dist)
    if len(groups) == 2:
        return cdf_two_populations(query, groups[0].dist, groups[1].dist, groups[0].size)
    if all(g.size == 1 for g in groups) and query.m <= RYSER_CAP:
        return cdf_bapat_beg(query, layout.flatten(), parallel=parallel)
    return cdf_multi_population(query, layout)
