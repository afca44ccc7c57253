"""Wall-clock comparison of the general permanent path against the specialized ones.

Each sweep cell evaluates the joint CDF of the first k order statistics of m
variables under one algorithm, timing it with a monotonic clock (one discarded
warmup, then the median of the repetitions). The fixed two-population setup --
n variables uniform on [0, 1], the rest exponential(1), thresholds at the
uniform quantiles j/(k+1) -- keeps values nontrivial and comparable across m;
the CSV records those choices in leading comment lines.
"""

from __future__ import annotations

import logging
import math
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .distributions import Exponential, Uniform
from .errors import SizeCapError
from .orderstats import (
    EvalResult,
    cdf_bapat_beg,
    cdf_multi_population,
    cdf_single_population,
    cdf_two_populations,
)
from .queries import OrderStatQuery, Population, PopulationLayout

logger = logging.getLogger(__name__)

CSV_HEADER = "m,k,n,algorithm,wall_time_seconds,term_count,value"

FIRST_POPULATION = Uniform(0.0, 1.0)
SECOND_POPULATION = Exponential(1.0)


@dataclass(frozen=True)
class BenchRecord:
    m: int
    k: int
    n: int
    algorithm: str
    wall_time_seconds: float
    term_count: int
    value: float


def _cell_callable(k: int, m: int, n: int, algorithm: str) -> Callable[[], EvalResult]:
    query = OrderStatQuery(
        indices=tuple(range(1, k + 1)),
        thresholds=tuple(float(FIRST_POPULATION.from_uniform(j / (k + 1))) for j in range(1, k + 1)),
        m=m,
    )
    f, g = FIRST_POPULATION, SECOND_POPULATION
    if algorithm == "two_pop":
        return lambda: cdf_two_populations(query, f, g, n)
    if algorithm == "bapat_beg":
        dists = (f,) * n + (g,) * (m - n)
        return lambda: cdf_bapat_beg(query, dists)
    if algorithm == "single_pop":
        return lambda: cdf_single_population(query, f)
    if algorithm == "multi_pop":
        layout = PopulationLayout((Population(n, f), Population(m - n, g)))
        return lambda: cdf_multi_population(query, layout)
    raise ValueError(f"unknown benchmark algorithm {algorithm!r}")


def bench_cell(k: int, m: int, n: int, algorithm: str, repetitions: int = 3) -> BenchRecord:
    """Time one (k, m, algorithm) cell: discard a warmup, take the median."""
    if repetitions < 3:
        raise ValueError(f"need at least 3 repetitions for a median, got {repetitions}")
    run = _cell_callable(k, m, n, algorithm)
    result = run()  # warmup, also supplies value/term_count
    times = []
    for _ in range(repetitions):
        start = time.perf_counter()
        run()
        times.append(time.perf_counter() - start)
    return BenchRecord(
        m=m,
        k=k,
        n=n,
        algorithm=algorithm,
        wall_time_seconds=statistics.median(times),
        term_count=result.term_count,
        value=result.value,
    )


def run_sweep(
    k_values: Iterable[int],
    m_values: Iterable[int],
    n: int,
    algorithms: Iterable[str],
    repetitions: int = 3,
) -> tuple[list[BenchRecord], list[str]]:
    """Sweep all (k, m, algorithm) cells sequentially; cap breaches skip the cell."""
    records: list[BenchRecord] = []
    skipped: list[str] = []
    for k in k_values:
        for m in m_values:
            if n > m or k > m:
                note = f"skipped k={k} m={m}: needs k <= m and n <= m (n={n})"
                logger.warning(note)
                skipped.append(note)
                continue
            for algorithm in algorithms:
                try:
                    records.append(bench_cell(k, m, n, algorithm, repetitions=repetitions))
                except SizeCapError as exc:
                    note = f"skipped k={k} m={m} {algorithm}: {exc}"
                    logger.warning(note)
                    skipped.append(note)
    return records, skipped


def write_csv(path, records: Iterable[BenchRecord], metadata: Mapping[str, str] | None = None) -> None:
    """Write records with the fixed header; metadata goes in leading '#' comments."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for key, value in (metadata or {}).items():
            handle.write(f"# {key}: {value}\n")
        handle.write(CSV_HEADER + "\n")
        for r in records:
            handle.write(
                f"{r.m},{r.k},{r.n},{r.algorithm},"
                f"{r.wall_time_seconds:.17g},{r.term_count},{r.value:.17g}\n"
            )


def default_metadata(n: int, repetitions: int) -> dict[str, str]:
    return {
        "first-population": "uniform(0,1)",
        "second-population": "exponential(rate=1)",
        "thresholds": "first-population quantiles j/(k+1), j=1..k",
        "indices": "1..k (the first k order statistics)",
        "first-population-count": str(n),
        "timing": f"time.perf_counter, median of {repetitions} repetitions, 1 warmup discarded",
    }


def loglog_slope(points: Iterable[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x); qualitative growth report."""
    logs = [(math.log(x), math.log(y)) for x, y in points]
    n = len(logs)
    if n < 2:
        raise ValueError("need at least two points for a slope")
    mean_x = sum(x for x, _ in logs) / n
    mean_y = sum(y for _, y in logs) / n
    sxx = sum((x - mean_x) ** 2 for x, _ in logs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in logs)
    return sxy / sxx
