"""Randomized agreement suite: every strategy against the others and the oracle.

Each trial draws an all-discrete problem, evaluates it under every admissible
strategy plus the exhaustive oracle, and compares the results pairwise. A
failing trial records the full problem document so it can be replayed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .distributions import Discrete
from .oracle import cdf_exhaustive_discrete, cdf_monte_carlo
from .orderstats import (
    cdf_auto,
    cdf_bapat_beg,
    cdf_multi_population,
    cdf_single_population,
    cdf_two_populations,
)
from .problems import Problem, problem_to_dict
from .queries import OrderStatQuery, Population, PopulationLayout

MAX_M_CAP = 8
TOLERANCE = 1e-12

_SUPPORT_POOL = (-1.5, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.75, 2.0)


@dataclass
class Disagreement:
    trial: int
    pairing: str
    left: float
    right: float
    problem_json: str

    def describe(self) -> str:
        return (
            f"trial {self.trial}: {self.pairing} disagreed "
            f"({self.left!r} vs {self.right!r}, delta {abs(self.left - self.right):.3e}); "
            f"replay: {self.problem_json}"
        )


@dataclass
class VerifyReport:
    max_m: int
    trials: int
    seed: int
    samples: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def pairings_checked(self) -> int:
        return sum(self.checked.values())

    def format(self) -> str:
        lines = [f"verify: max_m={self.max_m} trials={self.trials} seed={self.seed}"]
        for name in sorted(self.checked):
            lines.append(f"  pairing {name}: {self.checked[name]} checked")
        lines.append(f"  total strategy pairings checked: {self.pairings_checked}")
        for failure in self.failures:
            lines.append("FAIL " + failure.describe())
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'} ({len(self.failures)} failures)")
        return "\n".join(lines)


def _random_discrete(rng: random.Random) -> Discrete:
    size = rng.randint(1, 3)
    support = sorted(rng.sample(_SUPPORT_POOL, size))
    weights = [rng.uniform(0.1, 1.0) for _ in range(size)]
    total = sum(weights)
    probs = [w / total for w in weights]
    # Re-anchor the last mass so the total is 1 up to one rounding step.
    probs[-1] = 1.0 - sum(probs[:-1])
    return Discrete(support=tuple(support), probs=tuple(probs))


def _random_problem(rng: random.Random, max_m: int) -> Problem:
    m = rng.randint(2, max_m)
    k = rng.randint(1, min(3, m))
    indices = tuple(sorted(rng.sample(range(1, m + 1), k)))
    n_groups = rng.randint(1, min(3, m))
    cuts = sorted(rng.sample(range(1, m), n_groups - 1))
    sizes = [b - a for a, b in zip((0, *cuts), (*cuts, m))]
    groups = tuple(Population(size, _random_discrete(rng)) for size in sizes)
    thresholds = tuple(
        sorted(
            rng.choice(_SUPPORT_POOL) if rng.random() < 0.5 else rng.uniform(-2.0, 2.5)
            for _ in range(k)
        )
    )
    layout = PopulationLayout(groups)
    query = OrderStatQuery(indices=indices, thresholds=thresholds, m=m)
    return Problem(layout=layout, query=query, algorithm="auto")


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= TOLERANCE or abs(a - b) <= TOLERANCE * max(abs(a), abs(b))


def run_verification(max_m: int, trials: int, seed: int, samples: int = 0) -> VerifyReport:
    """Run ``trials`` randomized agreement trials; deterministic in ``seed``.

    ``samples`` > 0 adds a Monte Carlo consistency check per trial (at least
    1000 samples). Every trial checks at least four strategy pairings:
    multi_pop/bapat_beg, each of those against the exhaustive oracle, and the
    auto dispatcher against multi_pop.
    """
    max_m = int(max_m)
    trials = int(trials)
    if not 2 <= max_m <= MAX_M_CAP:
        raise ValueError(f"max_m must lie in 2..{MAX_M_CAP}, got {max_m}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if samples and samples < 1000:
        raise ValueError(f"samples must be 0 (disabled) or at least 1000, got {samples}")

    rng = random.Random(seed)
    report = VerifyReport(max_m=max_m, trials=trials, seed=int(seed), samples=int(samples))

    for trial in range(trials):
        problem = _random_problem(rng, max_m)
        layout, query = problem.layout, problem.query
        doc = json.dumps(problem_to_dict(problem), separators=(",", ":"))

        def check(pairing: str, left, right, tol_abs: float | None = None) -> None:
            report.checked[pairing] = report.checked.get(pairing, 0) + 1
            try:
                lv = float(left())
                rv = float(right())
            except Exception as exc:  # a crash is a failure, not an abort
                report.failures.append(Disagreement(trial, f"{pairing} raised {exc!r}", 0.0, 0.0, doc))
                return
            agree = abs(lv - rv) <= tol_abs if tol_abs is not None else _close(lv, rv)
            if not agree:
                report.failures.append(Disagreement(trial, pairing, lv, rv, doc))

        multi = cdf_multi_population(query, layout)
        oracle_value = cdf_exhaustive_discrete(query, layout.flatten())
        check("multi_pop vs bapat_beg", lambda: multi.value, lambda: cdf_bapat_beg(query, layout.flatten()).value)
        check("multi_pop vs oracle", lambda: multi.value, lambda: oracle_value)
        check("bapat_beg vs oracle", lambda: cdf_bapat_beg(query, layout.flatten()).value, lambda: oracle_value)
        check("auto vs multi_pop", lambda: cdf_auto(query, layout).value, lambda: multi.value)
        if len(layout.groups) == 1:
            check("single_pop vs oracle", lambda: cdf_single_population(query, layout.groups[0].dist).value, lambda: oracle_value)
        if len(layout.groups) == 2:
            check(
                "two_pop vs oracle",
                lambda: cdf_two_populations(
                    query, layout.groups[0].dist, layout.groups[1].dist, layout.groups[0].size
                ).value,
                lambda: oracle_value,
            )
        if samples:
            mc = cdf_monte_carlo(query, layout, samples=samples, seed=hash((seed, trial)) & 0x7FFFFFFF)
            check(
                "monte_carlo vs multi_pop",
                lambda: mc.estimate,
                lambda: multi.value,
                tol_abs=max(5.0 * mc.std_error, 12.0 / samples),
            )
    return report
