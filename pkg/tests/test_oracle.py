import random

import pytest

from oscdf import (
    Discrete,
    OrderStatQuery,
    PointMass,
    PopulationLayout,
    SizeCapError,
    Uniform,
    cdf_auto,
    cdf_bapat_beg,
    cdf_exhaustive_discrete,
    cdf_monte_carlo,
    cdf_multi_population,
    cdf_two_populations,
)
from conftest import close, random_discrete, random_layout, random_query

COIN = Discrete(support=(0.0, 1.0), probs=(0.5, 0.5))


def test_both_coins_at_zero():
    q = OrderStatQuery(indices=(2,), thresholds=(0.0,), m=2)
    assert cdf_exhaustive_discrete(q, [COIN, COIN]) == pytest.approx(0.25, abs=1e-15)


def test_at_least_one_coin_at_zero():
    q = OrderStatQuery(indices=(1,), thresholds=(0.0,), m=2)
    assert cdf_exhaustive_discrete(q, [COIN, COIN]) == pytest.approx(0.75, abs=1e-15)


def test_three_mixed_coins_match_bb():
    dists = [
        COIN,
        Discrete(support=(0.0, 1.0), probs=(0.3, 0.7)),
        Discrete(support=(0.0, 1.0), probs=(0.9, 0.1)),
    ]
    q = OrderStatQuery(indices=(1, 3), thresholds=(0.0, 1.0), m=3)
    oracle = cdf_exhaustive_discrete(q, dists)
    assert close(cdf_bapat_beg(q, dists).value, oracle, 1e-12)


def test_exhaustive_agreement_random_configs():
    rng = random.Random(12)
    for _ in range(50):
        m = rng.randint(2, 6)
        q = random_query(rng, m)
        layout = random_layout(rng, m, dist_maker=random_discrete)
        oracle = cdf_exhaustive_discrete(q, layout.flatten())
        assert close(cdf_multi_population(q, layout).value, oracle, 1e-12)
        assert close(cdf_bapat_beg(q, layout.flatten()).value, oracle, 1e-12)
        if len(layout.groups) == 2:
            two = cdf_two_populations(
                q, layout.groups[0].dist, layout.groups[1].dist, layout.groups[0].size
            )
            assert close(two.value, oracle, 1e-12)


def test_exhaustive_rejects_non_discrete():
    q = OrderStatQuery(indices=(1,), thresholds=(0.5,), m=2)
    with pytest.raises(TypeError):
        cdf_exhaustive_discrete(q, [COIN, Uniform(0.0, 1.0)])


def test_exhaustive_outcome_cap():
    q = OrderStatQuery(indices=(1,), thresholds=(0.0,), m=24)
    with pytest.raises(SizeCapError) as exc:
        cdf_exhaustive_discrete(q, [COIN] * 24)
    assert exc.value.cap == 10_000_000


def test_monte_carlo_point_mass_is_certain():
    q = OrderStatQuery(indices=(3,), thresholds=(5.0,), m=3)
    layout = PopulationLayout.from_pairs([(3, PointMass(5.0))])
    est = cdf_monte_carlo(q, layout, samples=1000, seed=1)
    assert est.estimate == 1.0
    assert est.std_error == 0.0


def test_monte_carlo_known_value():
    q = OrderStatQuery(indices=(2,), thresholds=(0.5,), m=2)
    layout = PopulationLayout.from_pairs([(2, Uniform(0.0, 1.0))])
    est = cdf_monte_carlo(q, layout, samples=100_000, seed=2024)
    assert abs(est.estimate - 0.25) <= 4.0 * est.std_error
    assert est.std_error <= 0.5 / (100_000**0.5)


def test_monte_carlo_deterministic_replay():
    q = OrderStatQuery(indices=(1,), thresholds=(0.4,), m=3)
    layout = PopulationLayout.from_pairs([(3, Uniform(0.0, 1.0))])
    a = cdf_monte_carlo(q, layout, samples=5000, seed=99)
    b = cdf_monte_carlo(q, layout, samples=5000, seed=99)
    c = cdf_monte_carlo(q, layout, samples=5000, seed=100)
    assert a == b
    assert a.estimate != c.estimate


def test_monte_carlo_metadata_records_generator():
    q = OrderStatQuery(indices=(1,), thresholds=(0.4,), m=2)
    layout = PopulationLayout.from_pairs([(2, Uniform(0.0, 1.0))])
    est = cdf_monte_carlo(q, layout, samples=1000, seed=5)
    assert "PCG64" in est.generator


def test_monte_carlo_sample_floor():
    q = OrderStatQuery(indices=(1,), thresholds=(0.4,), m=2)
    layout = PopulationLayout.from_pairs([(2, Uniform(0.0, 1.0))])
    with pytest.raises(ValueError):
        cdf_monte_carlo(q, layout, samples=999, seed=5)


def test_monte_carlo_tracks_exact_engine():
    rng = random.Random(31)
    hits = 0
    trials = 30
    for t in range(trials):
        m = rng.randint(2, 8)
        q = random_query(rng, m)
        layout = random_layout(rng, m)
        exact = cdf_auto(q, layout).value
        est = cdf_monte_carlo(q, layout, samples=20_000, seed=t)
        margin = max(4.0 * est.std_error, 20.0 / 20_000)
        hits += abs(est.estimate - exact) <= margin
    assert hits >= trials - 1
