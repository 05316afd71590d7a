"""Deciding whether a pair of aggregation functions can totally order intervals.

A pair (A, B) is *admissible* when simultaneous equality A(u) = A(x) and
B(u) = B(x) forces u = x; the two-stage comparison "A first, B to break
ties" is then a total order refining the componentwise interval order.

The decision engine layers three kinds of evidence, strongest first:

1.  Constructive exclusions.  Pairs that saturate an endpoint (both send
    [0, x] to 0, or both send [x, 1] to 1) collide immediately; a nilpotent
    Archimedean t-norm or t-conorm admits an explicit collision built from
    its additive generator.  These verdicts ship a verified witness pair.
2.  Shape criteria.  For quasi-arithmetic means, pairwise generator means
    and strict Archimedean t-norm/t-conorm pairs, admissibility reduces to
    the convexity class of a generator composite, certified exactly by the
    closed-form registry.  Failed shape criteria are converted back into
    witnesses by locating a zero of the collision gap.
3.  The oracle.  A quantized exhaustive scan over a triangular grid of
    intervals, with bisection refinement along level curves.  A confirmed
    witness proves non-admissibility outright; an empty scan is evidence,
    not proof, and is labelled as such.

Verdicts from (A, B) and (B, A) always agree in outcome because the defining
condition is symmetric in the two components.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .aggregators import (
    AggregationFunction,
    KProjection,
    QuasiLinear,
    SchurPair,
    TConorm,
    TNorm,
    k_mean,
    quasi_linear_mean,
    schur_pair_mean,
    tconorm,
    tnorm,
)
from .generators import (
    Convexity,
    Generator,
    Monotonicity,
    ScanOutcome,
    collision_gap,
    composite,
    identity,
)
from .intervals import Interval, interval_grid

WITNESS_TOL = 1e-9
WITNESS_GAP = 1e-4
ORACLE_QUANTUM = 1e-4
ORACLE_CONFIRM = 1e-10


class Outcome(Enum):
    ADMISSIBLE = "admissible"
    NOT_ADMISSIBLE = "not_admissible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Witness:
    """Two distinct intervals with (near-)equal values under both components."""

    u: Interval
    x: Interval
    residual_a: float
    residual_b: float

    @property
    def endpoint_gap(self) -> float:
        return max(abs(self.u.lo - self.x.lo), abs(self.u.hi - self.x.hi))

    def swapped(self) -> "Witness":
        return Witness(self.u, self.x, self.residual_b, self.residual_a)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    rule: str
    witness: Witness | None = None
    note: str = ""

    def to_json_dict(self) -> dict:
        d: dict = {"outcome": self.outcome.value, "rule": self.rule}
        if self.witness is not None:
            d["witness"] = {
                "u": list(self.witness.u.as_tuple()),
                "x": list(self.witness.x.as_tuple()),
                "residual_a": self.witness.residual_a,
                "residual_b": self.witness.residual_b,
            }
        else:
            d["witness"] = None
        if self.note:
            d["note"] = self.note
        return d


def make_witness(a: AggregationFunction, b: AggregationFunction,
                 u: Interval, x: Interval,
                 tol: float = WITNESS_TOL, gap: float = WITNESS_GAP) -> Witness | None:
    """Validate a candidate collision; None when it fails the contract."""
    ra = abs(a(u) - a(x))
    rb = abs(b(u) - b(x))
    w = Witness(u, x, ra, rb)
    if ra <= tol and rb <= tol and w.endpoint_gap >= gap:
        return w
    return None


# ---------------------------------------------------------------------------
# Descriptor views
# ---------------------------------------------------------------------------


def _k_weight(af: AggregationFunction) -> float | None:
    d = af.descriptor
    if isinstance(d, KProjection):
        return d.w
    if isinstance(d, QuasiLinear) and d.generator.kind == "identity":
        return d.weight
    if isinstance(d, SchurPair) and d.f.kind == "identity":
        return 0.5
    return None


def _as_quasi(af: AggregationFunction) -> tuple[Generator, float] | None:
    d = af.descriptor
    if isinstance(d, QuasiLinear):
        return d.generator, d.weight
    if isinstance(d, KProjection) and 0.0 < d.w < 1.0:
        return identity(), d.w
    return None


def _as_schur(af: AggregationFunction) -> Generator | None:
    d = af.descriptor
    if isinstance(d, SchurPair):
        return d.f
    if isinstance(d, KProjection) and d.w == 0.5:
        return identity()
    return None


def is_conjunctive(af: AggregationFunction) -> bool:
    """True when A([0, x]) = 0 for every x (a descriptor-level fact)."""
    d = af.descriptor
    if isinstance(d, TNorm):
        return True
    if isinstance(d, KProjection):
        return d.w == 0.0
    if isinstance(d, QuasiLinear):
        return math.isinf(d.generator.at_zero)
    return False


def is_disjunctive(af: AggregationFunction) -> bool:
    """True when A([x, 1]) = 1 for every x."""
    d = af.descriptor
    if isinstance(d, TConorm):
        return True
    if isinstance(d, KProjection):
        return d.w == 1.0
    if isinstance(d, QuasiLinear):
        return math.isinf(d.generator.at_one)
    return False


# ---------------------------------------------------------------------------
# Constructive witnesses
# ---------------------------------------------------------------------------


def _bisect_monotone(fn, lo: float, hi: float, target: float, iters: int = 200) -> float:
    """Solve fn(x) = target by bisection for continuous monotone fn."""
    flo, fhi = float(fn(lo)), float(fn(hi))
    increasing = fhi >= flo
    a, b = lo, hi
    for _ in range(iters):
        m = 0.5 * (a + b)
        fm = float(fn(m))
        if fm == target:
            return m
        if (fm < target) == increasing:
            a = m
        else:
            b = m
        if b - a <= 1e-18 * max(1.0, abs(b)):
            break
    return 0.5 * (a + b)


def nilpotent_witness(t: Generator, s: Generator) -> tuple[Interval, Interval]:
    """Two distinct intervals equal under both the t-norm of ``t`` and the
    t-conorm of ``s``, for a pair with at least one nilpotent generator.

    Works inside the saturation region of the nilpotent side, where one of
    the two aggregations is pinned at its extreme and the other reduces to a
    plain generator-sum equation solved by bisection.
    """
    t_nil = math.isfinite(t.at_zero)
    s_nil = math.isfinite(s.at_one)
    if not (t_nil or s_nil):
        raise ValueError("at least one generator must be nilpotent")

    if t_nil and not s_nil:
        # T saturates to 0 below m_t; match the s-sums there.
        m = _bisect_monotone(t.fn, 0.0, 1.0, 0.5 * t.at_zero)
        return _low_region_witness(s, m)
    if s_nil and not t_nil:
        # S saturates to 1 above l_s; match the t-sums there.
        ls = _bisect_monotone(s.fn, 0.0, 1.0, 0.5 * s.at_one)
        u = 0.5 * (ls + 1.0)
        d1 = float(t.fn(u))
        d2 = float(t.fn(ls)) - float(t.fn(u))
        if abs(d1 - d2) <= 1e-14 * max(1.0, d1, d2):
            return Interval(u, u), Interval(ls, 1.0)
        if d1 < d2:
            x1 = _bisect_monotone(t.fn, ls, u, 2.0 * float(t.fn(u)))
            return Interval(u, u), Interval(x1, 1.0)
        x2 = _bisect_monotone(t.fn, u, 1.0, float(t.fn(u)) - d2)
        return Interval(u, u), Interval(ls, x2)

    # both nilpotent: stay below both saturation thresholds
    m_t = _bisect_monotone(t.fn, 0.0, 1.0, 0.5 * t.at_zero)
    m_s = _bisect_monotone(s.fn, 0.0, 1.0, 0.5 * s.at_one)
    return _low_region_witness(s, min(m_t, m_s))


def _low_region_witness(s: Generator, m: float) -> tuple[Interval, Interval]:
    u = 0.5 * m
    d1 = float(s.fn(u)) - float(s.fn(0.0))
    d2 = float(s.fn(m)) - float(s.fn(u))
    if abs(d1 - d2) <= 1e-14 * max(1.0, d1, d2):
        return Interval(u, u), Interval(0.0, m)
    if d1 < d2:
        x2 = _bisect_monotone(s.fn, u, m, float(s.fn(u)) + d1)
        return Interval(u, u), Interval(0.0, x2)
    x1 = _bisect_monotone(s.fn, 0.0, u, float(s.fn(u)) - d2)
    return Interval(u, u), Interval(x1, m)


def _decode_vspace(f: Generator, v1: float, x0: float, t1: float, t2: float
                   ) -> tuple[Interval, Interval]:
    """Map a collision-gap zero back to a pair of intervals.

    The scan works in the value space of f; (s1, s2) is the deformed pair
    with the same v1-weighted mean as (t1, t2).
    """
    s1 = t1 + v1 * x0
    s2 = t2 - (1.0 - v1) * x0
    # s1 <= s2 holds mathematically; rounding at the full deformation
    # x0 = t2 - t1 can invert the images by one ulp, so sort defensively
    u_ends = sorted((float(f.inv(s1)), float(f.inv(s2))))
    x_ends = sorted((float(f.inv(t1)), float(f.inv(t2))))
    return Interval(*u_ends), Interval(*x_ends)


def _collision_witness(f: Generator, g: Generator, w1: float, w2: float,
                       a: AggregationFunction, b: AggregationFunction,
                       resolution: int = 33, margin: float = 0.02) -> Witness | None:
    """Search the collision gap of the composite for a verified witness.

    Scans endpoint pairs (widest first, so witnesses are well separated) of a
    bounded window of f's value range, bisects any zero or sign change of the
    gap, decodes it back to intervals, and validates against the actual
    aggregation functions.
    """
    comp = composite(f, g)
    h = comp.fn
    v1 = w1 if f.increasing else 1.0 - w1
    v2 = w2 if f.increasing else 1.0 - w2

    with np.errstate(all="ignore"):
        ts = np.sort(np.asarray(f.fn(np.linspace(margin, 1.0 - margin, resolution)), float))
    pairs = [
        (float(ts[i]), float(ts[j]))
        for i in range(len(ts) - 1)
        for j in range(i + 1, len(ts))
    ]
    pairs.sort(key=lambda p: (-(p[1] - p[0]), p[0]))

    zero_tol = 1e-12
    u_signs: list[tuple[float, float, float]] = []
    for t1, t2 in pairs:
        xs = np.linspace(0.0, t2 - t1, 49)[1:]
        a_vals = np.asarray([float(h(t1 + v1 * xx)) for xx in xs])
        b_vals = np.asarray([float(h(t2 - (1.0 - v1) * xx)) for xx in xs])
        gs = (1.0 - v2) * (a_vals - float(h(t1))) + v2 * (b_vals - float(h(t2)))
        if not np.all(np.isfinite(gs)):
            continue
        if np.all(np.abs(gs) < zero_tol):
            x0 = float(xs[len(xs) // 2])
        else:
            pos = gs > zero_tol
            neg = gs < -zero_tol
            if np.any(pos) and np.any(neg):
                flips = np.nonzero((pos[:-1] & neg[1:]) | (neg[:-1] & pos[1:]))[0]
                if flips.size == 0:
                    continue
                k = int(flips[0])

                def gap_at(xx: float) -> float:
                    return collision_gap(xx, t1, t2, v1, v2, h)

                xa, xb = float(xs[k]), float(xs[k + 1])
                ga = float(gs[k])
                for _ in range(200):
                    xm = 0.5 * (xa + xb)
                    gm = gap_at(xm)
                    if gm == 0.0:
                        xa = xb = xm
                        break
                    if (gm > 0) == (ga > 0):
                        xa, ga = xm, gm
                    else:
                        xb = xm
                x0 = 0.5 * (xa + xb)
            else:
                u_signs.append((t1, t2, float(gs[-1])))
                continue
        u_int, x_int = _decode_vspace(f, v1, x0, t1, t2)
        w = make_witness(a, b, u_int, x_int)
        if w is not None:
            return w

    # No zero inside any single endpoint pair; chase a sign change of the
    # full-deformation gap across pairs along the connecting segment.
    pos = [p for p in u_signs if p[2] > zero_tol]
    neg = [p for p in u_signs if p[2] < -zero_tol]
    if pos and neg:
        (a1, a2, ua) = pos[0]
        (b1, b2, _) = neg[0]

        def u_along(lmb: float):
            t1 = (1.0 - lmb) * a1 + lmb * b1
            t2 = (1.0 - lmb) * a2 + lmb * b2
            if t2 <= t1:
                return t1, t2, math.nan
            return t1, t2, collision_gap(t2 - t1, t1, t2, v1, v2, h)

        la, lb = 0.0, 1.0
        for _ in range(200):
            lm = 0.5 * (la + lb)
            t1m, t2m, um = u_along(lm)
            if not math.isfinite(um) or um == 0.0:
                break
            if (um > 0) == (ua > 0):
                la = lm
            else:
                lb = lm
        t1m, t2m, um = u_along(0.5 * (la + lb))
        if math.isfinite(um) and t2m > t1m:
            u_int, x_int = _decode_vspace(f, v1, t2m - t1m, t1m, t2m)
            return make_witness(a, b, u_int, x_int)
    return None


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------


_SATURATION_LOW = (Interval(0.0, 0.3), Interval(0.0, 0.6))
_SATURATION_HIGH = (Interval(0.4, 1.0), Interval(0.7, 1.0))


def _saturation_verdict(a: AggregationFunction, b: AggregationFunction) -> Verdict | None:
    if is_conjunctive(a) and is_conjunctive(b):
        w = make_witness(a, b, *_SATURATION_LOW)
        return Verdict(Outcome.NOT_ADMISSIBLE, "conjunctive-saturation", witness=w)
    if is_disjunctive(a) and is_disjunctive(b):
        w = make_witness(a, b, *_SATURATION_HIGH)
        return Verdict(Outcome.NOT_ADMISSIBLE, "disjunctive-saturation", witness=w)
    return None


def rule_quasi_endpoint_exclusion(f: Generator, w1: float, g: Generator,
                                  w2: float) -> Verdict | None:
    """Exclusion for quasi-arithmetic pairs whose generators both blow up at
    the same end of [0,1]: all intervals [0, x] (or [x, 1]) collide."""
    a = quasi_linear_mean(f, w1)
    b = quasi_linear_mean(g, w2)
    return _saturation_verdict(a, b)


def _shape_or_numeric(f: Generator, g: Generator):
    return composite(f, g).shape


def rule_quasi_equal_weights(f: Generator, g: Generator, w: float,
                             a: AggregationFunction | None = None,
                             b: AggregationFunction | None = None) -> Verdict | None:
    """Equal-weight quasi-arithmetic pairs are admissible exactly when the
    composite g o f^{-1} is strictly convex or strictly concave (and no
    endpoint exclusion applies)."""
    a = a if a is not None else quasi_linear_mean(f, w)
    b = b if b is not None else quasi_linear_mean(g, w)
    sat = _saturation_verdict(a, b)
    if sat is not None:
        return sat
    shape = _shape_or_numeric(f, g)
    if shape.convexity.is_strict:
        return Verdict(Outcome.ADMISSIBLE, "equal-weights-shape")
    witness = _collision_witness(f, g, w, w, a, b)
    if witness is not None:
        return Verdict(Outcome.NOT_ADMISSIBLE, "equal-weights-collision", witness=witness)
    if shape.convexity in (Convexity.AFFINE, Convexity.MIXED):
        # shape certified non-strict in closed form, but no witness survived
        # validation; report the exclusion without one
        return Verdict(
            Outcome.NOT_ADMISSIBLE,
            "equal-weights-shape",
            note="composite certified neither strictly convex nor strictly concave",
        )
    return None


def _weight_row_matches(shape, f_increasing: bool, w1: float, w2: float) -> bool:
    """Row lookup: weight comparison x f direction -> admissible composite shapes."""
    convexish = shape.convexity.implies_convex
    concavish = shape.convexity.implies_concave
    inc = shape.monotonicity is Monotonicity.STRICTLY_INCREASING
    dec = shape.monotonicity is Monotonicity.STRICTLY_DECREASING
    if w1 < w2:
        if f_increasing:
            return (convexish and inc) or (concavish and dec)
        return (convexish and dec) or (concavish and inc)
    if f_increasing:
        return (convexish and dec) or (concavish and inc)
    return (convexish and inc) or (concavish and dec)


def rule_quasi_unequal_weights(f: Generator, g: Generator, w1: float, w2: float,
                               a: AggregationFunction | None = None,
                               b: AggregationFunction | None = None) -> Verdict | None:
    """Sufficient criterion for distinct weights: a convexity/monotonicity
    row match of the composite.  No row plus no located collision leaves the
    pair undecided (this regime is not fully characterized)."""
    if w1 == w2:
        raise ValueError("rule requires distinct weights")
    a = a if a is not None else quasi_linear_mean(f, w1)
    b = b if b is not None else quasi_linear_mean(g, w2)
    sat = _saturation_verdict(a, b)
    if sat is not None:
        return sat
    shape = _shape_or_numeric(f, g)
    if _weight_row_matches(shape, f.increasing, w1, w2):
        return Verdict(Outcome.ADMISSIBLE, "weight-order-shape")
    witness = _collision_witness(f, g, w1, w2, a, b)
    if witness is not None:
        return Verdict(Outcome.NOT_ADMISSIBLE, "weighted-collision", witness=witness)
    return None


def rule_k0_k1(b: AggregationFunction, k_weight: float,
               samples: int = 21, margin: float = 1e-9) -> Verdict | None:
    """Pairing the 0- or 1-projection with B.

    (K_0, B) orders totally iff x -> B(x1, x) is strictly increasing for each
    x1; dually (K_1, B) needs strict increase in the first argument.  The
    check runs on a sample grid with the given strictness margin, so an
    ADMISSIBLE answer is grid evidence while a flat stretch yields a
    verified collision.
    """
    if k_weight not in (0.0, 1.0):
        raise ValueError("rule applies to the endpoint projections only")
    k_af = k_mean(k_weight)
    anchors = np.linspace(0.0, 1.0, samples)
    for anchor in anchors:
        if k_weight == 0.0:
            frees = np.linspace(anchor, 1.0, samples)
            los = np.full_like(frees, anchor)
            his = frees
        else:
            frees = np.linspace(0.0, anchor, samples)
            los = frees
            his = np.full_like(frees, anchor)
        if frees[-1] - frees[0] < 1e-3:
            continue
        vals = b.values(los, his)
        diffs = np.diff(vals)
        flat = np.nonzero(diffs <= margin)[0]
        if flat.size:
            k = int(flat[0])
            u = Interval(float(los[k]), float(his[k]))
            x = Interval(float(los[k + 1]), float(his[k + 1]))
            w = make_witness(k_af, b, u, x) if k_weight == 0.0 else make_witness(b, k_af, u, x)
            if w is not None:
                rule = "k0-flat-second-arg" if k_weight == 0.0 else "k1-flat-first-arg"
                return Verdict(Outcome.NOT_ADMISSIBLE, rule, witness=w)
            return None
    rule = "k0-second-arg-strict" if k_weight == 0.0 else "k1-first-arg-strict"
    return Verdict(Outcome.ADMISSIBLE, rule, note=f"grid evidence, {samples}x{samples} samples")


def rule_tnorm_tconorm(t_af: AggregationFunction, s_af: AggregationFunction) -> Verdict | None:
    """An Archimedean t-norm paired with an Archimedean t-conorm.

    Any nilpotent side forces a constructive collision.  For two strict
    generators the pair is admissible exactly when the conorm-over-norm
    composite is strictly convex or strictly concave.
    """
    td: TNorm = t_af.descriptor
    sd: TConorm = s_af.descriptor
    if not (td.is_strict and sd.is_strict):
        u, x = nilpotent_witness(td.generator, sd.generator)
        w = make_witness(t_af, s_af, u, x, tol=1e-12)
        return Verdict(Outcome.NOT_ADMISSIBLE, "nilpotent-collision", witness=w)
    shape = _shape_or_numeric(td.generator, sd.generator)
    if shape.convexity.is_strict:
        return Verdict(Outcome.ADMISSIBLE, "strict-archimedean-shape")
    witness = _collision_witness(td.generator, sd.generator, 0.5, 0.5, t_af, s_af)
    if witness is not None:
        return Verdict(Outcome.NOT_ADMISSIBLE, "strict-archimedean-collision", witness=witness)
    if shape.convexity in (Convexity.AFFINE, Convexity.MIXED):
        return Verdict(
            Outcome.NOT_ADMISSIBLE,
            "strict-archimedean-shape",
            note="composite certified neither strictly convex nor strictly concave",
        )
    return None


def rule_schur_pair(f: Generator, g: Generator,
                    a: AggregationFunction | None = None,
                    b: AggregationFunction | None = None) -> Verdict | None:
    """Pairwise generator means 0.5(f(u1)+f(u2)) and 0.5(g(u1)+g(u2)).

    Admissible exactly when g o f^{-1} is strictly convex or strictly
    concave."""
    a = a if a is not None else schur_pair_mean(f)
    b = b if b is not None else schur_pair_mean(g)
    shape = _shape_or_numeric(f, g)
    if shape.convexity.is_strict:
        return Verdict(Outcome.ADMISSIBLE, "pair-mean-shape")
    witness = _collision_witness(f, g, 0.5, 0.5, a, b)
    if witness is not None:
        return Verdict(Outcome.NOT_ADMISSIBLE, "pair-mean-collision", witness=witness)
    if shape.convexity in (Convexity.AFFINE, Convexity.MIXED):
        return Verdict(
            Outcome.NOT_ADMISSIBLE,
            "pair-mean-shape",
            note="composite certified neither strictly convex nor strictly concave",
        )
    return None


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------


def _rules_once(a: AggregationFunction, b: AggregationFunction) -> Verdict | None:
    ka, kb = _k_weight(a), _k_weight(b)
    if ka is not None and kb is not None and ka != kb:
        return Verdict(Outcome.ADMISSIBLE, "projection-pair")

    sat = _saturation_verdict(a, b)
    if sat is not None:
        return sat

    if isinstance(a.descriptor, TNorm) and isinstance(b.descriptor, TConorm):
        return rule_tnorm_tconorm(a, b)

    if ka in (0.0, 1.0) and kb is None:
        return rule_k0_k1(b, ka)

    qa, qb = _as_quasi(a), _as_quasi(b)
    if qa is not None and qb is not None:
        (f, w1), (g, w2) = qa, qb
        if w1 == w2:
            return rule_quasi_equal_weights(f, g, w1, a, b)
        return rule_quasi_unequal_weights(f, g, w1, w2, a, b)

    sa, sb = _as_schur(a), _as_schur(b)
    if sa is not None and sb is not None:
        return rule_schur_pair(sa, sb, a, b)

    return None


def check_pair(a: AggregationFunction, b: AggregationFunction, *,
               resolution: int = 200, tol: float = WITNESS_TOL,
               use_oracle: bool = True) -> Verdict:
    """Decide admissibility of (A, B).

    Rule verdicts come first (trying both orientations), the oracle last.  A
    NOT_ADMISSIBLE verdict carries a verified witness whenever one could be
    constructed; an UNKNOWN verdict after an empty oracle scan records which
    resolution was exhausted.
    """
    v = _rules_once(a, b)
    if v is None:
        v = _rules_once(b, a)
        if v is not None and v.witness is not None:
            v = Verdict(v.outcome, v.rule, v.witness.swapped(), v.note)
    if v is not None:
        return v
    if use_oracle:
        found = oracle_search(a, b, resolution=resolution, tol=tol)
        if found is not None:
            u, x = found
            w = make_witness(a, b, u, x, tol=tol)
            if w is not None:
                return Verdict(Outcome.NOT_ADMISSIBLE, "oracle", witness=w)
        return Verdict(
            Outcome.UNKNOWN, "oracle",
            note=f"no collision found at resolution {resolution} (evidence, not proof)",
        )
    return Verdict(Outcome.UNKNOWN, "rules", note="no criterion matched; oracle disabled")


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------


def _grid_values(af: AggregationFunction, lo: np.ndarray, hi: np.ndarray,
                 threads: int) -> np.ndarray:
    if threads <= 1 or lo.size < 4096:
        return af.values(lo, hi)
    chunks = np.array_split(np.arange(lo.size), threads)
    out = np.empty(lo.size)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [(idx, pool.submit(af.values, lo[idx], hi[idx])) for idx in chunks]
        for idx, fut in futs:
            out[idx] = fut.result()
    return out


def _solve_second_endpoint(a: AggregationFunction, x1: float, target: float,
                           iters: int = 60) -> float | None:
    """Bisect x2 in [x1, 1] with A([x1, x2]) = target; None if not bracketed."""
    lo_val = a(Interval(x1, x1))
    hi_val = a(Interval(x1, 1.0))
    if not (min(lo_val, hi_val) - 1e-13 <= target <= max(lo_val, hi_val) + 1e-13):
        return None
    increasing = hi_val >= lo_val
    lo_x, hi_x = x1, 1.0
    for _ in range(iters):
        mid = 0.5 * (lo_x + hi_x)
        v = a(Interval(x1, mid))
        if (v < target) == increasing:
            lo_x = mid
        else:
            hi_x = mid
    return 0.5 * (lo_x + hi_x)


def _solve_second_endpoint_vec(a: AggregationFunction, x1s: np.ndarray,
                               target: float, iters: int = 60
                               ) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized x2 solve of A([x1, x2]) = target; returns (x2s, bracketed)."""
    lo_val = a.values(x1s, x1s)
    hi_val = a.values(x1s, np.ones_like(x1s))
    lo_b = np.minimum(lo_val, hi_val) - 1e-13
    hi_b = np.maximum(lo_val, hi_val) + 1e-13
    ok = (lo_b <= target) & (target <= hi_b)
    increasing = hi_val >= lo_val
    lo_x = x1s.copy()
    hi_x = np.ones_like(x1s)
    for _ in range(iters):
        mid = 0.5 * (lo_x + hi_x)
        v = a.values(x1s, mid)
        go_up = (v < target) == increasing
        lo_x = np.where(go_up, mid, lo_x)
        hi_x = np.where(go_up, hi_x, mid)
    return 0.5 * (lo_x + hi_x), ok


def _refine_candidate(a: AggregationFunction, b: AggregationFunction,
                      u: Interval, x: Interval, window: float,
                      tol: float) -> Interval | None:
    """Bisection refinement along the A-level curve through x.

    The level curve A([x1, x2]) = A(u) is traced over a dense local window of
    x1 values (vectorized bisection in x2); sign changes of the B-residual
    along the curve locate potential simultaneous collisions.  Brackets whose
    root would land within the distinctness floor of u (the trivial solution
    x = u) are discarded cheaply; surviving roots are polished by scalar
    bisection and confirmed to ~1e-10 in both residuals.
    """
    target_a = a(u)
    target_b = b(u)

    lo_w = max(0.0, x.lo - window)
    hi_w = min(1.0, x.lo + window)
    x1s = np.linspace(lo_w, hi_w, 201)
    x2s, ok = _solve_second_endpoint_vec(a, x1s, target_a)
    valid = ok & (x2s >= x1s - 1e-12)
    if not np.any(valid):
        return None
    x1s, x2s = x1s[valid], np.maximum(x2s[valid], x1s[valid])
    res = b.values(x1s, x2s) - target_b

    def polish(x1a: float, x1b: float, ra: float) -> Interval | None:
        lo_x, hi_x = x1a, x1b
        for _ in range(60):
            mid = 0.5 * (lo_x + hi_x)
            x2m = _solve_second_endpoint(a, mid, target_a)
            if x2m is None:
                return None
            rm = b(Interval(mid, x2m)) - target_b
            if rm == 0.0:
                lo_x = hi_x = mid
                break
            if (rm > 0) == (ra > 0):
                lo_x = mid
            else:
                hi_x = mid
        x1r = 0.5 * (lo_x + hi_x)
        x2r = _solve_second_endpoint(a, x1r, target_a)
        if x2r is None:
            return None
        cand = Interval(x1r, max(x1r, x2r))
        gap = max(abs(cand.lo - u.lo), abs(cand.hi - u.hi))
        if gap < WITNESS_GAP:
            return None
        if abs(a(cand) - target_a) <= ORACLE_CONFIRM and abs(b(cand) - target_b) <= ORACLE_CONFIRM:
            return cand
        return None

    flips = np.nonzero(np.sign(res[:-1]) * np.sign(res[1:]) < 0)[0]
    for k in flips:
        x1a, x1b = float(x1s[k]), float(x1s[k + 1])
        # cheap rejection of the trivial root x == u
        root_est = x1a + (x1b - x1a) * abs(res[k]) / (abs(res[k]) + abs(res[k + 1]))
        x2_est = float(np.interp(root_est, x1s, x2s))
        gap_est = max(abs(root_est - u.lo), abs(x2_est - u.hi))
        if gap_est < 0.5 * WITNESS_GAP:
            continue
        cand = polish(x1a, x1b, float(res[k]))
        if cand is not None:
            return cand
    # exact-on-grid roots
    zeros = np.nonzero(res == 0.0)[0]
    for k in zeros:
        cand = Interval(float(x1s[k]), float(x2s[k]))
        gap = max(abs(cand.lo - u.lo), abs(cand.hi - u.hi))
        if gap >= WITNESS_GAP and abs(a(cand) - target_a) <= ORACLE_CONFIRM:
            return cand
    return None


def oracle_search(a: AggregationFunction, b: AggregationFunction, *,
                  resolution: int = 200, tol: float = WITNESS_TOL,
                  quantum: float = ORACLE_QUANTUM, threads: int = 1,
                  max_candidates: int = 10000) -> tuple[Interval, Interval] | None:
    """Exhaustive quantized scan for a simultaneous collision of A and B.

    All grid intervals are bucketed by their (A, B) values rounded to
    ``quantum``; colliding (and adjacent) buckets produce candidate pairs,
    which are confirmed by bisection refinement along the A-level curve to
    ~1e-10 before being accepted.  Returns the lexicographically smallest
    confirmed pair, or None.  An empty result is evidence at this
    resolution, not a proof of admissibility.
    """
    if resolution < 50:
        raise ValueError("oracle resolution must be at least 50")
    lo, hi = interval_grid(resolution)
    va = _grid_values(a, lo, hi, threads)
    vb = _grid_values(b, lo, hi, threads)
    ka = np.floor(va / quantum).astype(np.int64)
    kb = np.floor(vb / quantum).astype(np.int64)

    buckets: dict[tuple[int, int], list[int]] = {}
    for idx in range(lo.size):
        buckets.setdefault((int(ka[idx]), int(kb[idx])), []).append(idx)

    # canonical half of the 8-neighborhood: every pair with key distance at
    # most one in each coordinate is generated exactly once
    candidates: list[tuple[int, int]] = []
    for (i, j), members in buckets.items():
        candidates.extend(
            (m, n) for ki, m in enumerate(members) for n in members[ki + 1:]
        )
        for off_i, off_j in ((0, 1), (1, -1), (1, 0), (1, 1)):
            other = buckets.get((i + off_i, j + off_j))
            if other is not None:
                candidates.extend((m, n) for m in members for n in other)

    def lex_key(pair: tuple[int, int]) -> tuple:
        m, n = pair
        um = (lo[m], hi[m])
        xn = (lo[n], hi[n])
        if xn < um:
            um, xn = xn, um
        return um + xn

    candidates.sort(key=lex_key)
    window = 2.5 / resolution

    seen = 0
    for m, n in candidates:
        if seen >= max_candidates:
            break
        seen += 1
        u = Interval(float(lo[m]), float(hi[m]))
        x = Interval(float(lo[n]), float(hi[n]))
        if (u.lo, u.hi) > (x.lo, x.hi):
            u, x = x, u
        gap = max(abs(u.lo - x.lo), abs(u.hi - x.hi))
        ra = abs(va[m] - va[n])
        rb = abs(vb[m] - vb[n])
        if ra > quantum * 1.5 or rb > quantum * 1.5:
            continue
        if gap >= WITNESS_GAP and ra <= ORACLE_CONFIRM and rb <= ORACLE_CONFIRM:
            return u, x
        refined = _refine_candidate(a, b, u, x, window, tol)
        if refined is not None:
            return u, refined
    return None


# ---------------------------------------------------------------------------
# Quantified-weights diagnostic
# ---------------------------------------------------------------------------


def admissible_for_all_weight_orders(f: Generator, g: Generator,
                                     increasing_weights: bool = True) -> bool | None:
    """Whether the quasi-arithmetic pair is admissible for *every* weight
    pair w1 < w2 (or every w1 > w2).

    For strictly monotone composite and finite shared endpoints this is
    equivalent to plain (non-strict) convexity or concavity of the composite,
    matched against the direction table.  Returns None when the shape cannot
    be certified in closed form.  Note this quantified answer must not be
    read as an iff for any single weight pair.
    """
    if math.isinf(f.at_zero) and math.isinf(g.at_zero):
        return False
    if math.isinf(f.at_one) and math.isinf(g.at_one):
        return False
    shape = _shape_or_numeric(f, g)
    if shape.convexity in (Convexity.UNKNOWN,):
        return None
    if shape.convexity is Convexity.MIXED:
        return False
    if shape.monotonicity not in (
        Monotonicity.STRICTLY_INCREASING,
        Monotonicity.STRICTLY_DECREASING,
    ):
        return None
    w1, w2 = (0.25, 0.75) if increasing_weights else (0.75, 0.25)
    return _weight_row_matches(shape, f.increasing, w1, w2)
