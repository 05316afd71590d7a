"""Coincidence analysis between generated orders and projection orders.

Two total orders *coincide* when they compare every pair of intervals the
same way.  The tools here scan for disagreements, classify aggregation
functions by Schur monotonicity along constant-endpoint-sum diagonals, check
the midpoint-projection coincidence criterion, and construct explicit
disagreement witnesses between pairwise-generator-mean orders and projection
orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import brentq

from .aggregators import (
    AggregationFunction,
    KProjection,
    SchurPair,
    k_mean,
    schur_pair_mean,
)
from .generators import Convexity, Generator, generator_shape
from .intervals import Interval, interval_grid
from .orders import (
    AlphaBetaOrder,
    GeneratedPairOrder,
    Ordering,
    TotalOrder,
    compare,
    sign_matrix,
)


@dataclass(frozen=True)
class DisagreementWitness:
    u: Interval
    x: Interval
    first: Ordering   # how order 1 ranks u against x
    second: Ordering  # how order 2 ranks u against x


@dataclass(frozen=True)
class CoincidenceReport:
    """Outcome of a coincidence scan.

    ``certainty`` is "proved" only when a closed-form criterion backs the
    result; a clean grid scan alone is evidence and stays labelled "grid".
    ``alpha_thresholds`` lists projection weights at which the witness pair
    flips direction, when the comparison involves a projection order.
    """

    coincide: bool
    witness: DisagreementWitness | None = None
    alpha_thresholds: tuple[float, ...] = field(default_factory=tuple)
    certainty: str = "grid"
    disagreement_count: int = 0
    disagreements: tuple[DisagreementWitness, ...] = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        d: dict = {
            "coincide": self.coincide,
            "certainty": self.certainty,
            "disagreement_count": self.disagreement_count,
        }
        if self.witness is not None:
            d["witness"] = {
                "u": list(self.witness.u.as_tuple()),
                "x": list(self.witness.x.as_tuple()),
                "direction_in_order_1": self.witness.first.name.lower(),
                "direction_in_order_2": self.witness.second.name.lower(),
            }
        else:
            d["witness"] = None
        d["alpha_thresholds"] = list(self.alpha_thresholds)
        return d


def k_alpha_crossover(u: Interval, x: Interval) -> float | None:
    """The projection weight where the weighted projections of u and x tie.

    Root of alpha -> K_alpha(u) - K_alpha(x) on [0,1], found by root
    bracketing; None when the projections never tie on [0,1] (one interval
    dominates at every weight) or tie everywhere (u = x).
    """

    def gap(alpha: float) -> float:
        return (1.0 - alpha) * (u.lo - x.lo) + alpha * (u.hi - x.hi)

    g0, g1 = gap(0.0), gap(1.0)
    if g0 == 0.0 and g1 == 0.0:
        return None
    if g0 == 0.0:
        return 0.0
    if g1 == 0.0:
        return 1.0
    if (g0 > 0) == (g1 > 0):
        return None
    return float(brentq(gap, 0.0, 1.0, xtol=1e-14))


def _alpha_notes(order1: TotalOrder, order2: TotalOrder,
                 w: DisagreementWitness) -> tuple[float, ...]:
    if not isinstance(order1, AlphaBetaOrder) and not isinstance(order2, AlphaBetaOrder):
        return ()
    threshold = k_alpha_crossover(w.u, w.x)
    return (threshold,) if threshold is not None else ()


def orders_coincide(order1: TotalOrder, order2: TotalOrder,
                    resolution: int = 100,
                    candidates: list[tuple[Interval, Interval]] | None = None,
                    collect_all: bool = False,
                    max_collected: int = 100000) -> CoincidenceReport:
    """Compare two total orders on candidate pairs and a full endpoint grid.

    Candidate pairs (when given) are examined first, in order; the first pair
    the comparators rank in strictly opposite directions becomes the witness.
    Otherwise the witness is the lexicographically first strict disagreement
    on the grid.  A report with ``coincide=True`` is grid-level evidence.
    """
    if resolution < 50:
        raise ValueError("resolution must be at least 50")

    def report_from_pair(u: Interval, x: Interval) -> CoincidenceReport | None:
        s1 = compare(order1, u, x)
        s2 = compare(order2, u, x)
        if {s1, s2} == {Ordering.LESS, Ordering.GREATER}:
            w = DisagreementWitness(u, x, s1, s2)
            return CoincidenceReport(
                coincide=False, witness=w,
                alpha_thresholds=_alpha_notes(order1, order2, w),
                disagreement_count=1,
            )
        return None

    for u, x in candidates or ():
        rep = report_from_pair(u, x)
        if rep is not None:
            return rep

    lo, hi = interval_grid(resolution)
    s1 = sign_matrix(order1, lo, hi)
    s2 = sign_matrix(order2, lo, hi)
    mismatch = s1 != s2
    count = int(np.count_nonzero(np.triu(mismatch, k=1)))
    if count == 0:
        return CoincidenceReport(coincide=True)

    strict = np.triu((s1 == 1) & (s2 == -1) | (s1 == -1) & (s2 == 1), k=1)
    collected: list[DisagreementWitness] = []
    witness = None
    rows, cols = np.nonzero(strict if strict.any() else np.triu(mismatch, k=1))
    for i, j in zip(rows, cols):
        u = Interval(float(lo[i]), float(hi[i]))
        x = Interval(float(lo[j]), float(hi[j]))
        w = DisagreementWitness(u, x, compare(order1, u, x), compare(order2, u, x))
        if witness is None:
            witness = w
        if not collect_all:
            break
        collected.append(w)
        if len(collected) >= max_collected:
            break
    thresholds = _alpha_notes(order1, order2, witness) if witness else ()
    return CoincidenceReport(
        coincide=False, witness=witness, alpha_thresholds=thresholds,
        disagreement_count=count, disagreements=tuple(collected),
    )


# ---------------------------------------------------------------------------
# Schur classification
# ---------------------------------------------------------------------------


class SchurClass(Enum):
    STRICTLY_SCHUR_CONVEX = "strictly_schur_convex"
    SCHUR_CONVEX = "schur_convex"
    STRICTLY_SCHUR_CONCAVE = "strictly_schur_concave"
    SCHUR_CONCAVE = "schur_concave"
    NEITHER = "neither"
    UNKNOWN = "unknown"

    @property
    def implies_convex(self) -> bool:
        return self in (SchurClass.STRICTLY_SCHUR_CONVEX, SchurClass.SCHUR_CONVEX)

    @property
    def implies_concave(self) -> bool:
        return self in (SchurClass.STRICTLY_SCHUR_CONCAVE, SchurClass.SCHUR_CONCAVE)

    @property
    def is_strict(self) -> bool:
        return self in (SchurClass.STRICTLY_SCHUR_CONVEX, SchurClass.STRICTLY_SCHUR_CONCAVE)


def _closed_form_schur(af: AggregationFunction) -> SchurClass | None:
    d = af.descriptor
    if isinstance(d, SchurPair):
        shape = generator_shape(d.f)
        if shape is None:
            return None
        if shape.convexity is Convexity.STRICTLY_CONVEX:
            return SchurClass.STRICTLY_SCHUR_CONVEX
        if shape.convexity is Convexity.STRICTLY_CONCAVE:
            return SchurClass.STRICTLY_SCHUR_CONCAVE
        if shape.convexity is Convexity.AFFINE:
            # constant along diagonals: Schur-convex and Schur-concave at
            # once, but never strictly; report the convex label
            return SchurClass.SCHUR_CONVEX
        return None
    if isinstance(d, KProjection):
        # along u1 + u2 = const the projection is (1-w)*sum + (2w-1)*u2
        if d.w > 0.5:
            return SchurClass.STRICTLY_SCHUR_CONVEX
        if d.w < 0.5:
            return SchurClass.STRICTLY_SCHUR_CONCAVE
        return SchurClass.SCHUR_CONVEX
    return None


def schur_classify(af: AggregationFunction, resolution: int = 100,
                   tol: float = 1e-12) -> SchurClass:
    """Monotonicity class of the aggregator along constant-sum diagonals.

    Strict classes are emitted only by the closed-form registry (pairwise
    means of generators with certified strict convexity, and endpoint
    projections); the diagonal scan alone yields non-strict classes, NEITHER,
    or UNKNOWN.
    """
    if resolution < 50:
        raise ValueError("resolution must be at least 50")
    closed = _closed_form_schur(af)
    if closed is not None:
        return closed

    nondec = noninc = True
    varies = False
    for sigma in np.linspace(0.02, 1.98, resolution):
        hi_lo = 0.5 * sigma
        hi_hi = min(1.0, sigma)
        if hi_hi - hi_lo < 1e-9:
            continue
        his = np.linspace(hi_lo, hi_hi, resolution)
        los = sigma - his
        vals = af.values(los, his)
        diffs = np.diff(vals)
        if np.any(diffs < -tol):
            nondec = False
        if np.any(diffs > tol):
            noninc = False
            varies = True
        if not nondec and not noninc:
            return SchurClass.NEITHER
    if nondec and noninc:
        # constant along every diagonal: both classes hold non-strictly
        return SchurClass.SCHUR_CONVEX
    if nondec and varies:
        return SchurClass.SCHUR_CONVEX
    if noninc:
        return SchurClass.SCHUR_CONCAVE
    return SchurClass.UNKNOWN


# ---------------------------------------------------------------------------
# Midpoint-projection coincidence criterion
# ---------------------------------------------------------------------------


def midpoint_order_coincidence(b: AggregationFunction, resolution: int = 100
                               ) -> CoincidenceReport:
    """Coincidence of the (midpoint, B) order with a projection order.

    A strictly Schur-convex B makes the order generated by (midpoint
    projection, B) coincide with the (0.5, 1) projection order; strictly
    Schur-concave dually with (0.5, 0).  The pair must itself be admissible.
    Strict classifications give a "proved" report (re-verified on the grid);
    non-strict ones cannot settle coincidence and raise.
    """
    from .admissibility import Outcome, check_pair

    a = k_mean(0.5)
    verdict = check_pair(a, b)
    if verdict.outcome is Outcome.NOT_ADMISSIBLE:
        raise ValueError(
            f"(midpoint, {b.name}) is not admissible (rule {verdict.rule}); "
            "the generated relation is not a total order"
        )
    cls = schur_classify(b, resolution)
    if cls.implies_convex:
        target = AlphaBetaOrder(0.5, 1.0)
    elif cls.implies_concave:
        target = AlphaBetaOrder(0.5, 0.0)
    else:
        raise ValueError(
            f"{b.name}: Schur classification {cls.value} does not determine "
            "a reference projection order"
        )
    generated = GeneratedPairOrder(a, b, verify_admissible=False)
    rep = orders_coincide(generated, target, resolution=resolution)
    if rep.coincide and cls.is_strict:
        return CoincidenceReport(
            coincide=True, certainty="proved",
            disagreement_count=0,
        )
    return rep


# ---------------------------------------------------------------------------
# Constructive disagreement with projection orders
# ---------------------------------------------------------------------------


def _reflect_generator(f: Generator) -> Generator:
    """x -> 1 - f(1-x): swaps strict convexity and concavity, keeps the
    increasing-bijection contract."""
    return Generator(
        name=f"reflected({f.name})",
        fn=lambda x: 1.0 - np.asarray(f.fn(1.0 - np.asarray(x, float)), float),
        inv=lambda y: 1.0 - np.asarray(f.inv(1.0 - np.asarray(y, float)), float),
        increasing=True,
        at_zero=0.0,
        at_one=1.0,
        kind=None,
        param=None,
    )


def projection_disagreement_witness(f: Generator, alpha: float, beta: float
                                    ) -> tuple[Interval, Interval]:
    """Two intervals ranked in strictly opposite directions by the pairwise
    f-mean order and the (alpha, beta) projection order.

    Requires an increasing bijection f of [0,1]: strictly convex when
    alpha <= 0.5, strictly concave when alpha >= 0.5 (either works at 0.5).
    Returns (u, x) with u strictly below x for any order generated by the
    pair mean A(z) = 0.5(f(z1) + f(z2)) (with any admissible partner), while
    x is strictly below u for the (alpha, beta) projection order.

    Construction: nest u inside a wide base interval x so that both share the
    alpha-projection exactly, then raise u's left endpoint just enough to
    break the projection tie upward while the f-sum stays strictly below; the
    final left endpoint is found by bisection against the f-sum budget.
    """
    alpha, beta = float(alpha), float(beta)
    if not 0.0 <= alpha <= 1.0 or not 0.0 <= beta <= 1.0:
        raise ValueError("projection weights must lie in [0,1]")
    if alpha == beta:
        raise ValueError("the projection order requires alpha != beta")
    shape = generator_shape(f)
    if shape is None or not f.increasing:
        raise ValueError(f"{f.name}: need an increasing bijection with certified shape")
    if abs(f.at_zero) > 1e-12 or abs(f.at_one - 1.0) > 1e-12:
        raise ValueError(f"{f.name}: need f(0) = 0 and f(1) = 1")

    if shape.convexity is Convexity.STRICTLY_CONVEX and alpha <= 0.5:
        return _convex_disagreement(f, alpha)
    if shape.convexity is Convexity.STRICTLY_CONCAVE and alpha >= 0.5:
        u, x = _convex_disagreement(_reflect_generator(f), 1.0 - alpha)
        # reflect back: orders reverse, so the pair swaps roles
        return (
            Interval(1.0 - x.hi, 1.0 - x.lo),
            Interval(1.0 - u.hi, 1.0 - u.lo),
        )
    raise ValueError(
        f"{f.name}: shape {shape.convexity.value} does not support "
        f"alpha={alpha:g} (strictly convex needs alpha <= 0.5, strictly "
        "concave alpha >= 0.5)"
    )


def _convex_disagreement(f: Generator, alpha: float) -> tuple[Interval, Interval]:
    x1, x2 = 0.1, 0.9
    if alpha == 0.0:
        u1, u2 = x1, 0.5 * (x1 + x2)
    else:
        delta = 0.5 * alpha * (x2 - x1)
        u1 = x1 + delta
        u2 = x2 - delta * (1.0 - alpha) / alpha

    target = float(f.fn(x1)) + float(f.fn(x2))
    base = float(f.fn(u1)) + float(f.fn(u2))
    if not base < target:
        raise ValueError(
            f"{f.name}: convexity margin failed on the base pair (got "
            f"{base!r} >= {target!r})"
        )

    # push u1 upward while the f-sum stays strictly under the target
    def budget(t: float) -> float:
        return float(f.fn(u1 + t)) + float(f.fn(u2)) - target

    lo_t, hi_t = 0.0, u2 - u1
    if budget(hi_t) < 0:
        t_star = hi_t
    else:
        for _ in range(200):
            mid = 0.5 * (lo_t + hi_t)
            if budget(mid) < 0:
                lo_t = mid
            else:
                hi_t = mid
        t_star = lo_t
    u_hat = Interval(u1 + 0.5 * t_star, u2)
    x = Interval(x1, x2)

    a_margin = target - (float(f.fn(u_hat.lo)) + float(f.fn(u_hat.hi)))
    k_margin = ((1.0 - alpha) * u_hat.lo + alpha * u_hat.hi) - (
        (1.0 - alpha) * x.lo + alpha * x.hi
    )
    if a_margin <= 1e-10 or k_margin <= 1e-10:
        raise ValueError(
            f"{f.name}: disagreement margins too small "
            f"(f-sum {a_margin!r}, projection {k_margin!r})"
        )
    return u_hat, x
