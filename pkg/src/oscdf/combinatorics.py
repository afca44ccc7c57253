"""Enumeration and exact counting of the summation structures.

Every evaluation strategy sums over the same family of index vectors
``(i_0, i_1, ..., i_k, i_{k+1})``: nondecreasing, pinned to ``i_0 = 0`` and
``i_{k+1} = m``, with ``i_j`` at least the j-th requested order-statistic
index. The entry ``i_j`` is the number of variables at or below the j-th
threshold, so the gaps ``i_j - i_{j-1}`` say how many variables land in each
threshold interval. Allocation vectors and matrices split those gaps across
populations.

All counts are exact arbitrary-precision integers; the diagonal of the
Catalan triangle gives the Catalan numbers, which bound the number of index
vectors for any query.
"""

from __future__ import annotations

import math
from typing import Iterator

IndexVector = tuple[int, ...]
AllocationVector = tuple[int, ...]
AllocationMatrix = tuple[tuple[int, ...], ...]


def _validated_indices(indices, m) -> tuple[tuple[int, ...], int]:
    m = int(m)
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    indices = tuple(int(v) for v in indices)
    if not indices:
        raise ValueError("at least one order-statistic index is required")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError(f"indices must be strictly increasing, got {indices}")
    if indices[0] < 1 or indices[-1] > m:
        raise ValueError(f"indices must lie in 1..{m}, got {indices}")
    return indices, m


def enumerate_index_vectors(indices, m) -> Iterator[IndexVector]:
    """Yield every admissible index vector once, lexicographic in (i_1..i_k)."""
    indices, m = _validated_indices(indices, m)
    return _index_vectors(indices, m)


def _index_vectors(indices: tuple[int, ...], m: int) -> Iterator[IndexVector]:
    k = len(indices)
    chosen = [0] * k

    def rec(j: int, lo: int) -> Iterator[IndexVector]:
        if j == k:
            yield (0, *chosen, m)
            return
        for v in range(max(indices[j], lo), m + 1):
            chosen[j] = v
            yield from rec(j + 1, v)

    return rec(0, 0)


def count_index_vectors(indices, m) -> int:
    """Exact number of admissible index vectors, via the nested-sum recurrence.

    Equals the length of ``enumerate_index_vectors(indices, m)`` without
    materializing the stream.
    """
    indices, m = _validated_indices(indices, m)
    # counts[u] = number of valid prefixes (i_1..i_j) with i_j <= u.
    counts = [1] * (m + 1)
    for n_j in indices:
        acc = 0
        new = [0] * (m + 1)
        for u in range(m + 1):
            if u >= n_j:
                acc += counts[u]
            new[u] = acc
        counts = new
    return counts[m]


def catalan_triangle(k, m) -> int:
    """Number of index vectors for the first k order statistics out of m.

    Closed form C(m+k, k) - C(m+k, k-1), identical to C(m+k, k) * (1 - k/(m+1)).
    """
    k = int(k)
    m = int(m)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k > m:
        raise ValueError(f"k must not exceed m, got k={k}, m={m}")
    return math.comb(m + k, k) - math.comb(m + k, k - 1)


def catalan_number(m) -> int:
    """The m-th Catalan number, C(2m, m) / (m + 1), as an exact integer."""
    m = int(m)
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return math.comb(2 * m, m) // (m + 1)


def _gaps(ivec) -> tuple[int, ...]:
    ivec = tuple(int(v) for v in ivec)
    if len(ivec) < 2:
        raise ValueError(f"index vector needs at least two entries, got {ivec}")
    if ivec[0] != 0:
        raise ValueError(f"index vector must start at 0, got {ivec}")
    if any(b < a for a, b in zip(ivec, ivec[1:])):
        raise ValueError(f"index vector must be nondecreasing, got {ivec}")
    return tuple(b - a for a, b in zip(ivec, ivec[1:]))


def is_index_vector(ivec, indices, m) -> bool:
    """Membership test for the summation index set of (indices, m)."""
    indices, m = _validated_indices(indices, m)
    ivec = tuple(int(v) for v in ivec)
    if len(ivec) != len(indices) + 2:
        return False
    if ivec[0] != 0 or ivec[-1] != m:
        return False
    if any(b < a for a, b in zip(ivec, ivec[1:])):
        return False
    return all(ivec[j + 1] >= n_j for j, n_j in enumerate(indices))


def enumerate_allocation_vectors(ivec, n) -> Iterator[AllocationVector]:
    """Yield all splits of n items into the gaps of ``ivec``, each gap its cap.

    Deterministic order: earlier coordinates vary slowest and run from their
    largest admissible value down, so (1, 0) precedes (0, 1).
    """
    caps = _gaps(ivec)
    n = int(n)
    if not 0 <= n <= sum(caps):
        raise ValueError(f"n must lie in 0..{sum(caps)}, got {n}")
    return _capped_compositions(caps, n)


def _capped_compositions(caps: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    last = len(caps) - 1
    suffix = [0] * (len(caps) + 1)
    for j in reversed(range(len(caps))):
        suffix[j] = suffix[j + 1] + caps[j]
    out = [0] * len(caps)

    def rec(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if j == last:
            # Bounds are guaranteed by the pruning below, so this always yields.
            out[j] = remaining
            yield tuple(out)
            return
        hi = min(caps[j], remaining)
        lo = max(0, remaining - suffix[j + 1])
        for v in range(hi, lo - 1, -1):
            out[j] = v
            yield from rec(j + 1, remaining - v)

    return rec(0, total)


def enumerate_allocation_matrices(ivec, sizes) -> Iterator[AllocationMatrix]:
    """Yield all (k+1) x N nonnegative integer matrices with column s summing to
    ``sizes[s]`` and row j summing to the j-th gap of ``ivec``.

    Columns are chosen left to right with the same stream order as
    ``enumerate_allocation_vectors``, so for N = 2 the two streams are in
    bijection through the first column, elementwise and in order.
    """
    caps = _gaps(ivec)
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s <= 0 for s in sizes):
        raise ValueError(f"population sizes must all be positive, got {sizes}")
    if sum(sizes) != sum(caps):
        raise ValueError(
            f"population sizes must total {sum(caps)} (the index vector's m), got {sum(sizes)}"
        )
    return _allocation_matrices(caps, sizes)


def _allocation_matrices(caps: tuple[int, ...], sizes: tuple[int, ...]) -> Iterator[AllocationMatrix]:
    n_pops = len(sizes)
    cols: list[tuple[int, ...]] = [()] * n_pops

    def rec(s: int, caps_left: tuple[int, ...]) -> Iterator[AllocationMatrix]:
        if s == n_pops - 1:
            # Remaining caps sum to sizes[-1] by construction: the column is forced.
            cols[s] = caps_left
            yield tuple(zip(*cols))
            return
        for col in _capped_compositions(caps_left, sizes[s]):
            cols[s] = col
            yield from rec(s + 1, tuple(c - v for c, v in zip(caps_left, col)))

    return rec(0, caps)
