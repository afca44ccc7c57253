"""Exact matrix permanents and the expanded block matrix for one index vector.

per[A] = sum over all permutations pi of prod_i a[i, pi(i)] -- the determinant
with every sign positive. Row or column permutations leave it unchanged and it
is multilinear in the rows, but there is no useful factorization: exact
evaluation is exponential. Two kernels live here:

- ``permanent_definition``: the O(m!) expansion straight from the definition,
  kept as an independent oracle for small matrices.
- ``permanent_ryser``: inclusion-exclusion over column subsets, walked in
  Gray-code order so each step updates the row sums by a single column,
  O(2^m * m) arithmetic.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import TYPE_CHECKING, Sequence

from .combinatorics import is_index_vector
from .distributions import NEG_INF, POS_INF, DistributionSpec, eval_cdf
from .errors import SizeCapError

if TYPE_CHECKING:
    from .queries import OrderStatQuery

DEFINITION_CAP = 9
RYSER_CAP = 24

Row = tuple[float, ...]


def _square_rows(matrix) -> list[Row]:
    rows = [tuple(float(v) for v in row) for row in matrix]
    m = len(rows)
    if any(len(r) != m for r in rows):
        widths = sorted({len(r) for r in rows})
        raise ValueError(f"permanent requires a square matrix, got {m} rows of widths {widths}")
    if any(not math.isfinite(v) for r in rows for v in r):
        raise ValueError("matrix entries must all be finite")
    return rows


def permanent_definition(matrix) -> float:
    """Permanent by brute-force expansion over all m! permutations (oracle only)."""
    rows = _square_rows(matrix)
    m = len(rows)
    if m > DEFINITION_CAP:
        raise SizeCapError("permanent by definition expansion", m, DEFINITION_CAP)
    if m == 0:
        return 1.0
    idx = range(m)
    return math.fsum(math.prod(rows[i][p[i]] for i in idx) for p in permutations(idx))


def permanent_ryser(matrix) -> float:
    """Permanent by Ryser's inclusion-exclusion formula with Gray-code updates.

    The 2^m - 1 subset terms alternate in sign, so the outer sum is the
    dominant rounding risk; it is accumulated with Neumaier compensation
    (inlined: this loop is the hot path of the whole package).
    """
    rows = _square_rows(matrix)
    m = len(rows)
    if m > RYSER_CAP:
        raise SizeCapError("permanent by Ryser's formula", m, RYSER_CAP)
    if m == 0:
        return 1.0
    cols = list(zip(*rows))
    row_sums = [0.0] * m
    total = 0.0
    correction = 0.0
    n_cols_in = 0
    prod = math.prod
    for b in range(1, 1 << m):
        # Gray code b ^ (b >> 1) flips exactly the lowest set bit of b.
        j = (b & -b).bit_length() - 1
        col = cols[j]
        if (b ^ (b >> 1)) >> j & 1:
            row_sums = [r + c for r, c in zip(row_sums, col)]
            n_cols_in += 1
        else:
            row_sums = [r - c for r, c in zip(row_sums, col)]
            n_cols_in -= 1
        term = prod(row_sums)
        if (m - n_cols_in) & 1:
            term = -term
        t = total + term
        if abs(total) >= abs(term):
            correction += (total - t) + term
        else:
            correction += (term - t) + total
        total = t
    return total + correction


def interval_probabilities(
    thresholds: Sequence, dists: Sequence[DistributionSpec]
) -> tuple[Row, ...]:
    """Per-variable probability of landing in each threshold interval.

    Returns k+1 rows; row j holds P(y_j < X_i <= y_{j+1}) for every variable i,
    with the sentinels closing the first and last interval so each column sums
    to 1. Entries are clamped at 0 against CDF round-off.
    """
    points = (NEG_INF, *thresholds, POS_INF)
    grid = [[eval_cdf(d, y) for d in dists] for y in points]
    return tuple(
        tuple(max(0.0, hi - lo) for lo, hi in zip(grid[j], grid[j + 1]))
        for j in range(len(points) - 1)
    )


def bapat_beg_matrix(query: "OrderStatQuery", dists: Sequence[DistributionSpec], ivec) -> tuple[Row, ...]:
    """Expanded m x m matrix whose permanent is one summand of the general formula.

    Block row j repeats the interval-probability row P(y_{j-1} < X_i <= y_j)
    once per variable counted in that interval by ``ivec``.
    """
    dists = tuple(dists)
    if len(dists) != query.m:
        raise ValueError(f"expected {query.m} distributions, got {len(dists)}")
    if not is_index_vector(ivec, query.indices, query.m):
        raise ValueError(f"{tuple(ivec)} is not in the summation index set for this query")
    ivec = tuple(int(v) for v in ivec)
    deltas = interval_probabilities(query.thresholds, dists)
    rows: list[Row] = []
    for j, delta_row in enumerate(deltas):
        rows.extend([delta_row] * (ivec[j + 1] - ivec[j]))
    return tuple(rows)
