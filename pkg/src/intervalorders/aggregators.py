"""Aggregation functions on unit intervals.

An aggregation function maps each interval [u1, u2] in [0,1] to a single
value in [0,1], sends [0,0] to 0 and [1,1] to 1, and is monotone for the
componentwise order.  Four families are provided:

* weighted quasi-arithmetic means  f^{-1}((1-w) f(u1) + w f(u2)),
* plain weighted endpoint projections  (1-w) u1 + w u2,
* pairwise generator means  0.5 (f(u1) + f(u2))  for an increasing
  bijection f of [0,1],
* Archimedean t-norms and t-conorms through their additive generators.

Quasi-arithmetic means use the extended-real convention that -inf dominates
+inf, so e.g. the geometric-mean family returns 0 on any interval touching 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .generators import Generator, generator_from_config, validate_generator
from .intervals import Interval

INF = math.inf


class AggregationError(ValueError):
    """Raised when a requested aggregation function violates its contract."""


# ---------------------------------------------------------------------------
# Descriptors: structured provenance consumed by the admissibility rules.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuasiLinear:
    generator: Generator
    weight: float


@dataclass(frozen=True)
class KProjection:
    w: float


@dataclass(frozen=True)
class SchurPair:
    f: Generator


@dataclass(frozen=True)
class TNorm:
    generator: Generator  # strictly decreasing, t(1) = 0

    @property
    def is_strict(self) -> bool:
        return math.isinf(self.generator.at_zero)


@dataclass(frozen=True)
class TConorm:
    generator: Generator  # strictly increasing, s(0) = 0

    @property
    def is_strict(self) -> bool:
        return math.isinf(self.generator.at_one)


class AggregationFunction:
    """An evaluatable interval aggregator with a family descriptor.

    ``values`` is vectorized over parallel endpoint arrays; calling the
    object with an :class:`Interval` gives the scalar value.
    """

    def __init__(self, name: str, descriptor, values_fn):
        self.name = name
        self.descriptor = descriptor
        self._values = values_fn
        lo = self.values(np.array([0.0, 1.0]), np.array([0.0, 1.0]))
        if abs(float(lo[0])) > 1e-12 or abs(float(lo[1]) - 1.0) > 1e-12:
            raise AggregationError(
                f"{name}: boundary conditions failed: A([0,0])={lo[0]!r}, A([1,1])={lo[1]!r}"
            )

    def values(self, lo, hi) -> np.ndarray:
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        out = self._values(lo, hi)
        return np.clip(out, 0.0, 1.0)

    def __call__(self, z: Interval) -> float:
        return float(self.values(np.array([z.lo]), np.array([z.hi]))[0])

    def __repr__(self) -> str:
        return f"AggregationFunction({self.name})"


# ---------------------------------------------------------------------------
# Quasi-arithmetic means
# ---------------------------------------------------------------------------


def _infinite_endpoint(gen: Generator, sign: int) -> float:
    """The x in {0,1} whose generator value is the given signed infinity."""
    target = INF if sign > 0 else -INF
    if gen.at_zero == target:
        return 0.0
    if gen.at_one == target:
        return 1.0
    # unreachable for validated generators: infinite mixes only arise from
    # infinite endpoint values
    raise AggregationError(f"{gen.name}: no endpoint maps to {target}")


def quasi_linear_mean(gen: Generator, weight: float) -> AggregationFunction:
    """Weighted quasi-arithmetic mean f^{-1}((1-w) f(u1) + w f(u2)).

    The weight must lie strictly inside (0,1).  With f = log this is the
    weighted geometric mean u1^(1-w) u2^w; with f(x) = x^g the weighted
    root-mean-power; with f = logit the odds-weighted mean under the
    convention 0/0 = 0.
    """
    w = float(weight)
    if not 0.0 < w < 1.0:
        raise AggregationError(f"quasi-linear weight must lie in (0,1), got {w!r}")
    validate_generator(gen)
    neg_end = _infinite_endpoint(gen, -1) if (gen.at_zero == -INF or gen.at_one == -INF) else None
    pos_end = _infinite_endpoint(gen, +1) if (gen.at_zero == INF or gen.at_one == INF) else None

    def values(lo, hi):
        with np.errstate(all="ignore"):
            a = np.asarray(gen.fn(lo), dtype=float)
            b = np.asarray(gen.fn(hi), dtype=float)
            s = (1.0 - w) * a + w * b
            # -inf dominates +inf
            s = np.where(np.isneginf(a) | np.isneginf(b), -INF, s)
            finite = np.isfinite(s)
            core = np.asarray(gen.inv(np.where(finite, s, 0.5)), dtype=float)
            out = np.where(finite, core, 0.0)
            if neg_end is not None:
                out = np.where(np.isneginf(s), neg_end, out)
            if pos_end is not None:
                out = np.where(np.isposinf(s), pos_end, out)
        return out

    name = f"quasi_linear({gen.name}, w={w:g})"
    return AggregationFunction(name, QuasiLinear(gen, w), values)


def k_mean(w: float) -> AggregationFunction:
    """The weighted endpoint projection (1-w) u1 + w u2, w in [0,1]."""
    w = float(w)
    if not 0.0 <= w <= 1.0:
        raise AggregationError(f"projection weight must lie in [0,1], got {w!r}")

    def values(lo, hi):
        return (1.0 - w) * lo + w * hi

    return AggregationFunction(f"k_mean({w:g})", KProjection(w), values)


def schur_pair_mean(f: Generator) -> AggregationFunction:
    """The pairwise mean 0.5 (f(u1) + f(u2)) for an increasing bijection f.

    Requires f(0) = 0 and f(1) = 1 (within 1e-12).  Strict convexity of f
    makes the mean strictly Schur-convex; strict concavity makes it strictly
    Schur-concave.
    """
    validate_generator(f)
    if not f.increasing:
        raise AggregationError(f"{f.name}: pairwise mean needs an increasing bijection")
    if abs(f.at_zero) > 1e-12 or abs(f.at_one - 1.0) > 1e-12:
        raise AggregationError(
            f"{f.name}: pairwise mean needs f(0)=0 and f(1)=1, got "
            f"({f.at_zero!r}, {f.at_one!r})"
        )

    def values(lo, hi):
        with np.errstate(all="ignore"):
            return 0.5 * (np.asarray(f.fn(lo), float) + np.asarray(f.fn(hi), float))

    return AggregationFunction(f"pair_mean({f.name})", SchurPair(f), values)


# ---------------------------------------------------------------------------
# Archimedean t-norms / t-conorms via additive generators
# ---------------------------------------------------------------------------


def _validate_tnorm_generator(t: Generator) -> None:
    validate_generator(t)
    if t.increasing:
        raise AggregationError(f"{t.name}: a t-norm generator must be strictly decreasing")
    if abs(t.at_one) > 1e-12:
        raise AggregationError(f"{t.name}: a t-norm generator needs t(1) = 0")
    if not t.at_zero > 0:
        raise AggregationError(f"{t.name}: a t-norm generator needs t(0) > 0")


def _validate_tconorm_generator(s: Generator) -> None:
    validate_generator(s)
    if not s.increasing:
        raise AggregationError(f"{s.name}: a t-conorm generator must be strictly increasing")
    if abs(s.at_zero) > 1e-12:
        raise AggregationError(f"{s.name}: a t-conorm generator needs s(0) = 0")
    if not s.at_one > 0:
        raise AggregationError(f"{s.name}: a t-conorm generator needs s(1) > 0")


def tnorm_eval(t: Generator, z: Interval) -> float:
    """T(u1, u2) = t^{-1}(min(t(u1) + t(u2), t(0)))."""
    a = float(t.fn(z.lo))
    b = float(t.fn(z.hi))
    s = min(a + b, t.at_zero)
    if math.isinf(s):
        return 0.0
    return float(np.clip(t.inv(s), 0.0, 1.0))


def tconorm_eval(s: Generator, z: Interval) -> float:
    """S(u1, u2) = s^{-1}(min(s(u1) + s(u2), s(1)))."""
    a = float(s.fn(z.lo))
    b = float(s.fn(z.hi))
    v = min(a + b, s.at_one)
    if math.isinf(v):
        return 1.0
    return float(np.clip(s.inv(v), 0.0, 1.0))


def tnorm(t: Generator) -> AggregationFunction:
    """Archimedean t-norm from its additive generator.

    Strict when t(0) = inf (e.g. -log gives the product), nilpotent when
    t(0) < inf (e.g. 1-x gives max(u1+u2-1, 0)).
    """
    _validate_tnorm_generator(t)
    cap = t.at_zero

    def values(lo, hi):
        with np.errstate(all="ignore"):
            s = np.asarray(t.fn(lo), float) + np.asarray(t.fn(hi), float)
            s = np.minimum(s, cap)
            finite = np.isfinite(s)
            core = np.asarray(t.inv(np.where(finite, s, 1.0)), float)
            return np.where(finite, core, 0.0)

    return AggregationFunction(f"tnorm({t.name})", TNorm(t), values)


def tconorm(s: Generator) -> AggregationFunction:
    """Archimedean t-conorm from its additive generator.

    Strict when s(1) = inf (e.g. -log(1-x) gives u1 + u2 - u1*u2), nilpotent
    when s(1) < inf (e.g. the identity gives min(u1+u2, 1)).
    """
    _validate_tconorm_generator(s)
    cap = s.at_one

    def values(lo, hi):
        with np.errstate(all="ignore"):
            v = np.asarray(s.fn(lo), float) + np.asarray(s.fn(hi), float)
            v = np.minimum(v, cap)
            finite = np.isfinite(v)
            core = np.asarray(s.inv(np.where(finite, v, 0.0)), float)
            return np.where(finite, core, 1.0)

    return AggregationFunction(f"tconorm({s.name})", TConorm(s), values)


# ---------------------------------------------------------------------------
# Named means used throughout the examples and the verdict battery
# ---------------------------------------------------------------------------


def root_power_mean(gamma: float, w: float) -> AggregationFunction:
    """((1-w) u1^gamma + w u2^gamma)^(1/gamma)."""
    from .generators import power

    return quasi_linear_mean(power(gamma), w)


def exponential_mean(gamma: float, w: float) -> AggregationFunction:
    """log((1-w) e^(gamma u1) + w e^(gamma u2)) / gamma."""
    from .generators import exponential

    return quasi_linear_mean(exponential(gamma), w)


def geometric_mean(w: float) -> AggregationFunction:
    """u1^(1-w) u2^w, the log-generated mean; 0 on intervals touching 0."""
    from .generators import logarithm

    return quasi_linear_mean(logarithm(), w)


def logit_mean(w: float) -> AggregationFunction:
    """The logit-generated mean; under 0/0 = 0 it equals
    u1^(1-w) u2^w / (u1^(1-w) u2^w + (1-u1)^(1-w) (1-u2)^w)."""
    from .generators import logit

    return quasi_linear_mean(logit(), w)


# ---------------------------------------------------------------------------
# Config parsing
# ---------------------------------------------------------------------------

_FAMILIES = ("quasi_linear", "schur_pair", "tnorm", "tconorm", "k")


def aggregator_from_config(spec: dict) -> AggregationFunction:
    """Build an aggregation function from a config mapping.

    Formats: {"family": "quasi_linear", "generator": {...}, "weight": 0.5},
    {"family": "schur_pair", "f": {...}}, {"family": "tnorm", "generator":
    {...}}, {"family": "tconorm", "generator": {...}}, {"family": "k",
    "w": 0.5}.
    """
    if not isinstance(spec, dict) or "family" not in spec:
        raise AggregationError(
            f"aggregator spec must be a mapping with a 'family' key, got {spec!r}"
        )
    family = spec["family"]
    if family not in _FAMILIES:
        raise AggregationError(
            f"unknown aggregator family {family!r}; supported families: "
            + ", ".join(_FAMILIES)
        )
    if family == "k":
        if "w" not in spec:
            raise AggregationError("family 'k' requires a 'w' weight")
        return k_mean(float(spec["w"]))
    if family == "quasi_linear":
        if "generator" not in spec or "weight" not in spec:
            raise AggregationError("family 'quasi_linear' requires 'generator' and 'weight'")
        return quasi_linear_mean(generator_from_config(spec["generator"]), float(spec["weight"]))
    if family == "schur_pair":
        if "f" not in spec:
            raise AggregationError("family 'schur_pair' requires an 'f' generator spec")
        return schur_pair_mean(generator_from_config(spec["f"]))
    if family == "tnorm":
        if "generator" not in spec:
            raise AggregationError("family 'tnorm' requires a 'generator'")
        return tnorm(generator_from_config(spec["generator"]))
    # tconorm
    if "generator" not in spec:
        raise AggregationError("family 'tconorm' requires a 'generator'")
    return tconorm(generator_from_config(spec["generator"]))
