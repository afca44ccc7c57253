"""Problem documents: the JSON wire format shared by the CLI and the service.

Layout:

    {"populations": [{"size": 2, "dist": {"kind": "uniform", "a": 0, "b": 1}}],
     "query": {"indices": [1, 3], "thresholds": [0.2, 0.7]},
     "algorithm": "auto"}

Validation errors carry the path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .distributions import dist_from_dict, dist_to_dict
from .errors import SpecError
from .orderstats import (
    EvalResult,
    cdf_auto,
    cdf_bapat_beg,
    cdf_multi_population,
    cdf_single_population,
    cdf_two_populations,
)
from .queries import OrderStatQuery, Population, PopulationLayout

ALGORITHMS = ("auto", "bapat_beg", "single_pop", "two_pop", "multi_pop")


@dataclass(frozen=True)
class Problem:
    layout: PopulationLayout
    query: OrderStatQuery
    algorithm: str = "auto"


def problem_from_dict(doc) -> Problem:
    if not isinstance(doc, dict):
        raise SpecError("$", "expected a JSON object")
    unknown = set(doc) - {"populations", "query", "algorithm"}
    if unknown:
        raise SpecError(sorted(unknown)[0], "unexpected field")

    pops = doc.get("populations")
    if not isinstance(pops, list) or not pops:
        raise SpecError("populations", "expected a non-empty array")
    groups = []
    for i, entry in enumerate(pops):
        where = f"populations[{i}]"
        if not isinstance(entry, dict):
            raise SpecError(where, "expected an object")
        if "size" not in entry:
            raise SpecError(f"{where}.size", "missing")
        if "dist" not in entry:
            raise SpecError(f"{where}.dist", "missing")
        extra = set(entry) - {"size", "dist"}
        if extra:
            raise SpecError(f"{where}.{sorted(extra)[0]}", "unexpected field")
        dist = dist_from_dict(entry["dist"], where=f"{where}.dist")
        try:
            groups.append(Population(entry["size"], dist))
        except (TypeError, ValueError) as exc:
            raise SpecError(f"{where}.size", str(exc)) from exc
    layout = PopulationLayout(tuple(groups))

    qdoc = doc.get("query")
    if not isinstance(qdoc, dict):
        raise SpecError("query", "expected an object")
    for name in ("indices", "thresholds"):
        if name not in qdoc:
            raise SpecError(f"query.{name}", "missing")
        if not isinstance(qdoc[name], list):
            raise SpecError(f"query.{name}", "expected an array")
    extra = set(qdoc) - {"indices", "thresholds"}
    if extra:
        raise SpecError(f"query.{sorted(extra)[0]}", "unexpected field")
    try:
        query = OrderStatQuery(
            indices=tuple(qdoc["indices"]),
            thresholds=tuple(qdoc["thresholds"]),
            m=layout.total,
        )
    except (TypeError, ValueError) as exc:
        raise SpecError("query", str(exc)) from exc

    algorithm = doc.get("algorithm", "auto")
    if algorithm not in ALGORITHMS:
        raise SpecError("algorithm", f"unknown algorithm {algorithm!r} (expected one of: {', '.join(ALGORITHMS)})")
    _check_admissible(algorithm, layout)
    return Problem(layout=layout, query=query, algorithm=algorithm)


def _check_admissible(algorithm: str, layout: PopulationLayout) -> None:
    n_groups = len(layout.groups)
    if algorithm == "single_pop" and n_groups != 1:
        raise SpecError("algorithm", f"single_pop requires exactly one population, got {n_groups}")
    if algorithm == "two_pop" and n_groups > 2:
        raise SpecError("algorithm", f"two_pop requires at most two populations, got {n_groups}")


def problem_to_dict(problem: Problem) -> dict:
    return {
        "populations": [
            {"size": g.size, "dist": dist_to_dict(g.dist)} for g in problem.layout.groups
        ],
        "query": {
            "indices": list(problem.query.indices),
            "thresholds": [float(y) for y in problem.query.thresholds],
        },
        "algorithm": problem.algorithm,
    }


def load_problem(path) -> Problem:
    with open(path, encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SpecError("$", f"not valid JSON: {exc}") from exc
    return problem_from_dict(doc)


def evaluate_problem(problem: Problem, algorithm: str | None = None, parallel: bool = False) -> EvalResult:
    """Run the problem under its own algorithm tag, or an explicit override."""
    algorithm = algorithm or problem.algorithm
    if algorithm not in ALGORITHMS:
        raise SpecError("algorithm", f"unknown algorithm {algorithm!r}")
    _check_admissible(algorithm, problem.layout)
    layout, query = problem.layout, problem.query
    if algorithm == "auto":
        return cdf_auto(query, layout, parallel=parallel)
    if algorithm == "bapat_beg":
        return cdf_bapat_beg(query, layout.flatten(), parallel=parallel)
    if algorithm == "single_pop":
        return cdf_single_population(query, layout.groups[0].dist)
    if algorithm == "two_pop":
        if len(layout.groups) == 1:
            only = layout.groups[0].dist
            return cdf_two_populations(query, only, only, layout.total)
        return cdf_two_populations(
            query, layout.groups[0].dist, layout.groups[1].dist, layout.groups[0].size
        )
    return cdf_multi_population(query, layout)
