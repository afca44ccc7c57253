"""Query and population-layout value objects shared by the evaluation strategies."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import DistributionSpec, Extended, ExtendedReal, ext_key


@dataclass(frozen=True)
class OrderStatQuery:
    """Which order statistics are constrained, and by what thresholds.

    ``indices`` are 1-based ranks (strictly increasing), ``thresholds`` the
    matching cutoffs (nondecreasing; the symbolic infinities are allowed), and
    ``m`` the total number of variables. Unsorted input is rejected rather
    than silently sorted, since reordering would mask caller bugs.
    """

    indices: tuple[int, ...]
    thresholds: tuple[ExtendedReal, ...]
    m: int

    def __post_init__(self):
        m = int(self.m)
        indices = tuple(int(v) for v in self.indices)
        thresholds = tuple(self._coerce_threshold(y) for y in self.thresholds)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "thresholds", thresholds)
        if m < 1:
            raise ValueError(f"m must be at least 1, got {m}")
        if not indices:
            raise ValueError("at least one order-statistic index is required")
        if len(indices) != len(thresholds):
            raise ValueError(
                f"indices and thresholds must have equal length, got {len(indices)} and {len(thresholds)}"
            )
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValueError(f"indices must be strictly increasing, got {indices}")
        if indices[0] < 1 or indices[-1] > m:
            raise ValueError(f"indices must lie in 1..{m}, got {indices}")
        keys = [ext_key(y) for y in thresholds]
        if any(k2 < k1 for k1, k2 in zip(keys, keys[1:])):
            raise ValueError(f"thresholds must be nondecreasing, got {thresholds}")

    @staticmethod
    def _coerce_threshold(y) -> ExtendedReal:
        if isinstance(y, Extended):
            return y
        y = float(y)
        if not math.isfinite(y):
            raise ValueError("thresholds must be finite or the NEG_INF/POS_INF sentinels")
        return y

    @property
    def k(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class Population:
    """A group of ``size`` variables sharing one distribution."""

    size: int
    dist: DistributionSpec

    def __post_init__(self):
        size = int(self.size)
        object.__setattr__(self, "size", size)
        if size < 1:
            raise ValueError(f"population size must be positive, got {size}")


@dataclass(frozen=True)
class PopulationLayout:
    """Ordered population groups; sizes must total the query's m."""

    groups: tuple[Population, ...]

    def __post_init__(self):
        groups = tuple(self.groups)
        object.__setattr__(self, "groups", groups)
        if not groups:
            raise ValueError("layout requires at least one population group")
        if any(not isinstance(g, Population) for g in groups):
            raise TypeError("layout groups must be Population instances")

    @classmethod
    def from_pairs(cls, pairs) -> "PopulationLayout":
        return cls(tuple(Population(size, dist) for size, dist in pairs))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(g.size for g in self.groups)

    @property
    def total(self) -> int:
        return sum(g.size for g in self.groups)

    def flatten(self) -> tuple[DistributionSpec, ...]:
        """One distribution per variable, groups in order."""
        out: list[DistributionSpec] = []
        for g in self.groups:
            out.extend([g.dist] * g.size)
        return tuple(out)
