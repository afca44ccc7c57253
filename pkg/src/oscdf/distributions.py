"""Univariate distributions: CDF evaluation, inverse-transform sampling, JSON codec.

Each distribution is an immutable value object exposing ``cdf`` (a float in
[0, 1]) and ``from_uniform`` (the inverse-CDF transform, usable on scalars and
numpy arrays alike). The symbolic endpoints ``NEG_INF`` and ``POS_INF`` stand
in for the open ends of the real line, so interval probabilities telescope to
exact 0 and 1 without ever doing arithmetic on floating infinities.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy.special import ndtri

from .errors import SpecError

PROB_SUM_TOL = 1e-12


class Extended(enum.Enum):
    """Symbolic infinities used as sentinel evaluation points."""

    NEG_INF = "-inf"
    POS_INF = "+inf"


NEG_INF = Extended.NEG_INF
POS_INF = Extended.POS_INF

ExtendedReal = Union[float, Extended]


def ext_key(x: ExtendedReal) -> tuple[int, float]:
    """Sort key realizing the total order NEG_INF < finite reals < POS_INF."""
    if x is NEG_INF:
        return (-1, 0.0)
    if x is POS_INF:
        return (1, 0.0)
    return (0, float(x))


def ext_le(a: ExtendedReal, b: ExtendedReal) -> bool:
    return ext_key(a) <= ext_key(b)


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Uniform:
    """Uniform distribution on [a, b]."""

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", _require_finite("a", self.a))
        object.__setattr__(self, "b", _require_finite("b", self.b))
        if not self.a < self.b:
            raise ValueError(f"uniform requires a < b, got a={self.a}, b={self.b}")

    def cdf(self, x: float) -> float:
        if x <= self.a:
            return 0.0
        if x >= self.b:
            return 1.0
        return (x - self.a) / (self.b - self.a)

    def from_uniform(self, u):
        return self.a + (self.b - self.a) * u


@dataclass(frozen=True)
class Exponential:
    """Exponential distribution with the given rate (mean 1/rate)."""

    rate: float

    def __post_init__(self):
        object.__setattr__(self, "rate", _require_finite("rate", self.rate))
        if not self.rate > 0:
            raise ValueError(f"exponential requires rate > 0, got {self.rate}")

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return -math.expm1(-self.rate * x)

    def from_uniform(self, u):
        return -np.log1p(-u) / self.rate


@dataclass(frozen=True)
class StandardNormal:
    """Normal distribution with mean 0 and variance 1."""

    def cdf(self, x: float) -> float:
        # erfc-based form is accurate to ~1 ulp over the whole real line.
        return 0.5 * math.erfc(-x / math.sqrt(2.0))

    def from_uniform(self, u):
        return ndtri(u)


@dataclass(frozen=True)
class PointMass:
    """Degenerate distribution concentrated at c."""

    c: float

    def __post_init__(self):
        object.__setattr__(self, "c", _require_finite("c", self.c))

    def cdf(self, x: float) -> float:
        return 1.0 if x >= self.c else 0.0

    def from_uniform(self, u):
        return np.full(np.shape(u), self.c, dtype=float)


@dataclass(frozen=True)
class Discrete:
    """Finite discrete distribution; the CDF is a right-continuous step function.

    A threshold equal to a support point counts that point's mass, which keeps
    the step convention aligned between formula evaluation and enumeration.
    """

    support: tuple[float, ...]
    probs: tuple[float, ...]
    _cum: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        support = tuple(_require_finite("support point", v) for v in self.support)
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "probs", probs)
        if not support:
            raise ValueError("discrete requires at least one support point")
        if len(support) != len(probs):
            raise ValueError("support and probs must have equal length")
        if any(x2 <= x1 for x1, x2 in zip(support, support[1:])):
            raise ValueError("discrete support must be strictly ascending")
        if any(p <= 0 for p in probs):
            raise ValueError("discrete probs must all be positive")
        total = math.fsum(probs)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"discrete probs must sum to 1 within {PROB_SUM_TOL}, got {total!r}")
        cum = []
        acc = 0.0
        for p in probs:
            acc += p
            cum.append(acc)
        object.__setattr__(self, "_cum", tuple(cum))

    def cdf(self, x: float) -> float:
        idx = bisect.bisect_right(self.support, x)
        return self._cum[idx - 1] if idx else 0.0

    def from_uniform(self, u):
        cum = np.asarray(self._cum)
        idx = np.searchsorted(cum, u, side="left")
        idx = np.minimum(idx, len(self.support) - 1)
        return np.asarray(self.support)[idx]


DistributionSpec = Union[Uniform, Exponential, StandardNormal, PointMass, Discrete]


def eval_cdf(dist: DistributionSpec, x: ExtendedReal) -> float:
    """Evaluate the CDF at an extended-real point.

    The sentinels map to exactly 0.0 and 1.0 with no arithmetic involved.
    """
    if x is NEG_INF:
        return 0.0
    if x is POS_INF:
        return 1.0
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("evaluation point must be finite or one of the NEG_INF/POS_INF sentinels")
    return dist.cdf(x)


def sample(dist: DistributionSpec, rng: np.random.Generator) -> float:
    """Draw one variate by inverse transform from the generator's uniform stream."""
    return float(dist.from_uniform(rng.random()))


_KINDS = {
    "uniform": (Uniform, ("a", "b")),
    "exponential": (Exponential, ("rate",)),
    "standard_normal": (StandardNormal, ()),
    "point_mass": (PointMass, ("c",)),
    "discrete": (Discrete, ("support", "probs")),
}


def dist_to_dict(dist: DistributionSpec) -> dict:
    """Serialize a distribution to its wire-format dictionary."""
    if isinstance(dist, Uniform):
        return {"kind": "uniform", "a": dist.a, "b": dist.b}
    if isinstance(dist, Exponential):
        return {"kind": "exponential", "rate": dist.rate}
    if isinstance(dist, StandardNormal):
        return {"kind": "standard_normal"}
    if isinstance(dist, PointMass):
        return {"kind": "point_mass", "c": dist.c}
    if isinstance(dist, Discrete):
        return {"kind": "discrete", "support": list(dist.support), "probs": list(dist.probs)}
    raise TypeError(f"not a distribution: {dist!r}")


def dist_from_dict(doc: dict, where: str = "dist") -> DistributionSpec:
    """Parse the wire-format dictionary, naming the offending field on error."""
    if not isinstance(doc, dict):
        raise SpecError(where, "expected an object")
    kind = doc.get("kind")
    if kind is None:
        raise SpecError(f"{where}.kind", "missing")
    if kind not in _KINDS:
        known = ", ".join(sorted(_KINDS))
        raise SpecError(f"{where}.kind", f"unknown kind {kind!r} (expected one of: {known})")
    cls, fields = _KINDS[kind]
    extra = set(doc) - {"kind", *fields}
    if extra:
        raise SpecError(f"{where}.{sorted(extra)[0]}", f"unexpected field for kind {kind!r}")
    kwargs = {}
    for name in fields:
        if name not in doc:
            raise SpecError(f"{where}.{name}", f"missing (required for kind {kind!r})")
        kwargs[name] = doc[name]
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise SpecError(where, str(exc)) from exc
