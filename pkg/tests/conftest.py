"""Shared helpers for building randomized test configurations."""

import random

from oscdf import (
    Discrete,
    Exponential,
    OrderStatQuery,
    PointMass,
    Population,
    PopulationLayout,
    StandardNormal,
    Uniform,
)

SUPPORT_POOL = (-1.5, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.75, 2.0)


def close(a, b, tol=1e-12):
    a, b = float(a), float(b)
    return abs(a - b) <= tol or abs(a - b) <= tol * max(abs(a), abs(b))


def random_discrete(rng: random.Random, max_support=3):
    size = rng.randint(1, max_support)
    support = sorted(rng.sample(SUPPORT_POOL, size))
    weights = [rng.uniform(0.1, 1.0) for _ in range(size)]
    total = sum(weights)
    probs = [w / total for w in weights]
    probs[-1] = 1.0 - sum(probs[:-1])
    return Discrete(support=tuple(support), probs=tuple(probs))


def random_any_dist(rng: random.Random):
    roll = rng.random()
    if roll < 0.35:
        return random_discrete(rng)
    if roll < 0.60:
        a = rng.uniform(-2.0, 1.0)
        return Uniform(a, a + rng.uniform(0.5, 3.0))
    if roll < 0.80:
        return Exponential(rng.uniform(0.3, 3.0))
    if roll < 0.92:
        return StandardNormal()
    return PointMass(rng.choice(SUPPORT_POOL))


def random_query(rng: random.Random, m, max_k=3, lo=-2.0, hi=2.5):
    k = rng.randint(1, min(max_k, m))
    indices = tuple(sorted(rng.sample(range(1, m + 1), k)))
    thresholds = tuple(
        sorted(
            rng.choice(SUPPORT_POOL) if rng.random() < 0.4 else rng.uniform(lo, hi)
            for _ in range(k)
        )
    )
    return OrderStatQuery(indices=indices, thresholds=thresholds, m=m)


def random_sizes(rng: random.Random, m, n_groups):
    cuts = sorted(rng.sample(range(1, m), n_groups - 1))
    return [b - a for a, b in zip((0, *cuts), (*cuts, m))]


def random_layout(rng: random.Random, m, max_groups=3, dist_maker=random_any_dist):
    n_groups = rng.randint(1, min(max_groups, m))
    sizes = random_sizes(rng, m, n_groups)
    return PopulationLayout(tuple(Population(size, dist_maker(rng)) for size in sizes))
