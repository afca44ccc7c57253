"""Ground-truth checks that share no combinatorial machinery with the formulas.

The exhaustive oracle enumerates every joint outcome of discrete variables,
sorts it, and tests the event directly; the Monte Carlo oracle samples
replicates and counts. Neither touches index vectors, permanents, or
multinomial coefficients, so bugs in those cannot cancel out here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .distributions import NEG_INF, POS_INF, Discrete, DistributionSpec
from .errors import SizeCapError
from .queries import OrderStatQuery, PopulationLayout

EXHAUSTIVE_OUTCOME_CAP = 10_000_000


def _event_holds(sorted_values: Sequence[float], query: OrderStatQuery) -> bool:
    for rank, threshold in zip(query.indices, query.thresholds):
        if threshold is POS_INF:
            continue
        if threshold is NEG_INF:
            return False
        if sorted_values[rank - 1] > threshold:
            return False
    return True


def cdf_exhaustive_discrete(query: OrderStatQuery, dists: Sequence[DistributionSpec]) -> float:
    """Exact probability by enumerating every joint outcome of discrete variables."""
    dists = tuple(dists)
    if len(dists) != query.m:
        raise ValueError(f"expected {query.m} distributions, got {len(dists)}")
    if any(not isinstance(d, Discrete) for d in dists):
        raise TypeError("the exhaustive oracle requires every distribution to be discrete")
    n_outcomes = math.prod(len(d.support) for d in dists)
    if n_outcomes > EXHAUSTIVE_OUTCOME_CAP:
        raise SizeCapError("exhaustive outcome enumeration", n_outcomes, EXHAUSTIVE_OUTCOME_CAP)
    pairs = [list(zip(d.support, d.probs)) for d in dists]
    return math.fsum(
        math.prod(p for _, p in outcome)
        for outcome in product(*pairs)
        if _event_holds(sorted(v for v, _ in outcome), query)
    )


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    std_error: float
    samples: int
    seed: int
    generator: str


def cdf_monte_carlo(
    query: OrderStatQuery, layout: PopulationLayout, samples: int, seed: int
) -> MonteCarloEstimate:
    """Frequency estimate from ``samples`` replicates, deterministic in ``seed``.

    Variates come from a single PCG64 uniform stream through each
    distribution's inverse CDF, so the whole estimate replays exactly from the
    seed alone.
    """
    samples = int(samples)
    if samples < 1000:
        raise ValueError(f"samples must be at least 1000, got {samples}")
    if layout.total != query.m:
        raise ValueError(f"population sizes total {layout.total}, but the query has m={query.m}")
    dists = layout.flatten()
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random((samples, query.m))
    values = np.empty((samples, query.m), dtype=float)
    for i, dist in enumerate(dists):
        values[:, i] = dist.from_uniform(u[:, i])
    values.sort(axis=1)
    mask = np.ones(samples, dtype=bool)
    for rank, threshold in zip(query.indices, query.thresholds):
        if threshold is POS_INF:
            continue
        if threshold is NEG_INF:
            mask[:] = False
            break
        mask &= values[:, rank - 1] <= threshold
    p_hat = int(mask.sum()) / samples
    std_error = math.sqrt(p_hat * (1.0 - p_hat) / samples)
    return MonteCarloEstimate(
        estimate=p_hat,
        std_error=std_error,
        samples=samples,
        seed=int(seed),
        generator=f"numpy.random.PCG64 (numpy {np.__version__})",
    )
