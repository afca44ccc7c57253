"""Exact joint CDFs of order statistics from one or more populations.

Core entry points: build distributions (``Uniform``, ``Exponential``,
``StandardNormal``, ``PointMass``, ``Discrete``), describe which order
statistics are constrained (``OrderStatQuery``) and who follows what
distribution (``PopulationLayout``), then evaluate with ``cdf_auto`` or a
specific strategy. ``oracle`` holds independent ground-truth checks and
``bench`` the timing harness.
"""

__version__ = "0.1.0"

from .combinatorics import (
    catalan_number,
    catalan_triangle,
    count_index_vectors,
    enumerate_allocation_matrices,
    enumerate_allocation_vectors,
    enumerate_index_vectors,
)
from .distributions import (
    NEG_INF,
    POS_INF,
    Discrete,
    DistributionSpec,
    Exponential,
    Extended,
    PointMass,
    StandardNormal,
    Uniform,
    dist_from_dict,
    dist_to_dict,
    eval_cdf,
    sample,
)
from .errors import SizeCapError, SpecError
from .oracle import MonteCarloEstimate, cdf_exhaustive_discrete, cdf_monte_carlo
from .orderstats import (
    EvalResult,
    cdf_auto,
    cdf_bapat_beg,
    cdf_multi_population,
    cdf_single_population,
    cdf_two_populations,
)
from .permanent import bapat_beg_matrix, permanent_definition, permanent_ryser
from .problems import Problem, evaluate_problem, load_problem, problem_from_dict, problem_to_dict
from .queries import OrderStatQuery, Population, PopulationLayout
from .verification import VerifyReport, run_verification

__all__ = [
    "__version__",
    "NEG_INF",
    "POS_INF",
    "Extended",
    "Uniform",
    "Exponential",
    "StandardNormal",
    "PointMass",
    "Discrete",
    "DistributionSpec",
    "eval_cdf",
    "sample",
    "dist_from_dict",
    "dist_to_dict",
    "OrderStatQuery",
    "Population",
    "PopulationLayout",
    "EvalResult",
    "cdf_auto",
    "cdf_bapat_beg",
    "cdf_single_population",
    "cdf_two_populations",
    "cdf_multi_population",
    "permanent_definition",
    "permanent_ryser",
    "bapat_beg_matrix",
    "count_index_vectors",
    "catalan_number",
    "catalan_triangle",
    "enumerate_index_vectors",
    "enumerate_allocation_vectors",
    "enumerate_allocation_matrices",
    "cdf_exhaustive_discrete",
    "cdf_monte_carlo",
    "MonteCarloEstimate",
    "run_verification",
    "VerifyReport",
    "Problem",
    "problem_from_dict",
    "problem_to_dict",
    "load_problem",
    "evaluate_problem",
    "SizeCapError",
    "SpecError",
]
