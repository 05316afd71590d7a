"""Strictly monotone generator functions and convexity analysis of composites.

A *generator* is a strictly monotone continuous function f on [0,1] whose
values at 0 and 1 may be +/-inf.  Generators feed three constructions:
weighted quasi-arithmetic means, additive representations of Archimedean
t-norms/t-conorms, and pairwise endpoint means.  In every one of them the
decisive object is the composite

    h = g o f^{-1}        on the open interval f((0,1)),

whose convexity class (strictly convex / convex / affine / concave /
strictly concave / mixed) governs whether the induced pair of aggregation
functions can order intervals without collisions.

Closed-form shape registry
--------------------------
For twice-differentiable strictly monotone f and g,

    sign(h''(y)) = sign(g'(x)) * sign(r_g(x) - r_f(x)),   x = f^{-1}(y),

where r_f = f''/f' is the log-derivative of f'.  For every builtin kind the
weighted numerator R_f(x) = x(1-x) * r_f(x) is a quadratic polynomial, so the
sign of h'' on (0,1) reduces to the sign pattern of the quadratic
N = R_g - R_f, which is decided exactly from its coefficients.  Only this
registry may certify *strict* convexity or concavity; the sampling-based
classifier below never does, because strictness on an open set cannot be
certified by finitely many samples.

Collision gap
-------------
Two endpoint pairs (s1,s2) and (t1,t2) with the same v1-weighted mean take
the form s1 = t1 + v1*x, s2 = t2 - (1-v1)*x for some deformation x in
(0, t2-t1].  The signed gap between the v2-weighted means of their h-images,

    G(x, t1, t2) = (1-v2)*(h(t1 + v1*x) - h(t1)) + v2*(h(t2 - (1-v1)*x) - h(t2)),

vanishes at some x > 0 exactly when two distinct pairs collide in both
weighted means at once.  ``collision_scan`` looks for such zeros on a grid;
``find_collision`` refines one to near machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from scipy.special import expit, logit as _logit_fn

INF = math.inf


class GeneratorError(ValueError):
    """Raised when a function fails the generator contract."""


class Convexity(Enum):
    STRICTLY_CONVEX = "strictly_convex"
    CONVEX = "convex"
    AFFINE = "affine"
    CONCAVE = "concave"
    STRICTLY_CONCAVE = "strictly_concave"
    MIXED = "mixed"
    UNKNOWN = "unknown"

    @property
    def is_strict(self) -> bool:
        return self in (Convexity.STRICTLY_CONVEX, Convexity.STRICTLY_CONCAVE)

    @property
    def implies_convex(self) -> bool:
        return self in (Convexity.STRICTLY_CONVEX, Convexity.CONVEX, Convexity.AFFINE)

    @property
    def implies_concave(self) -> bool:
        return self in (Convexity.STRICTLY_CONCAVE, Convexity.CONCAVE, Convexity.AFFINE)


class Monotonicity(Enum):
    STRICTLY_INCREASING = "strictly_increasing"
    STRICTLY_DECREASING = "strictly_decreasing"
    NON_MONOTONE = "non_monotone"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ShapeInfo:
    convexity: Convexity
    monotonicity: Monotonicity


@dataclass(frozen=True)
class Generator:
    """A strictly monotone continuous map [0,1] -> extended reals.

    ``fn`` and ``inv`` must accept numpy arrays.  ``at_zero``/``at_one`` are
    the (possibly infinite) endpoint values.  ``kind``/``param`` identify a
    builtin family for the closed-form shape registry; user-supplied
    generators leave them ``None`` and fall back to numerical classification.
    """

    name: str
    fn: Callable
    inv: Callable
    increasing: bool
    at_zero: float
    at_one: float
    kind: str | None = None
    param: float | None = None

    def __call__(self, x):
        return self.fn(x)

    @property
    def is_builtin(self) -> bool:
        return self.kind is not None

    def range_open(self) -> tuple[float, float]:
        """The open interval f((0,1)), endpoints possibly infinite."""
        a, b = self.at_zero, self.at_one
        return (min(a, b), max(a, b))


def validate_generator(gen: Generator, samples: int = 41, tol: float = 1e-9) -> None:
    """Check strict monotonicity, finiteness on (0,1), and inverse round-trip."""
    xs = np.linspace(0.0, 1.0, samples + 2)[1:-1]
    with np.errstate(all="ignore"):
        ys = np.asarray(gen.fn(xs), dtype=float)
    if not np.all(np.isfinite(ys)):
        raise GeneratorError(f"{gen.name}: values must be finite on (0,1)")
    diffs = np.diff(ys)
    if gen.increasing:
        if not np.all(diffs > 0):
            raise GeneratorError(f"{gen.name}: not strictly increasing on the sample grid")
    else:
        if not np.all(diffs < 0):
            raise GeneratorError(f"{gen.name}: not strictly decreasing on the sample grid")
    with np.errstate(all="ignore"):
        back = np.asarray(gen.inv(ys), dtype=float)
    if not np.all(np.abs(back - xs) <= tol):
        worst = float(np.max(np.abs(back - xs)))
        raise GeneratorError(f"{gen.name}: inverse round-trip error {worst:.3e} exceeds {tol:g}")


# ---------------------------------------------------------------------------
# Builtin generators
# ---------------------------------------------------------------------------


def _wrap(fn):
    def wrapped(x):
        with np.errstate(all="ignore"):
            return fn(np.asarray(x, dtype=float))

    return wrapped


def power(gamma: float) -> Generator:
    """x -> x**gamma, gamma != 0.  Decreasing with f(0)=inf for gamma < 0."""
    g = float(gamma)
    if g == 0.0:
        raise GeneratorError("power generator needs a nonzero exponent")
    return Generator(
        name=f"power({g:g})",
        fn=_wrap(lambda x: x**g),
        inv=_wrap(lambda y: y ** (1.0 / g)),
        increasing=g > 0,
        at_zero=0.0 if g > 0 else INF,
        at_one=1.0,
        kind="power",
        param=g,
    )


def exponential(gamma: float) -> Generator:
    """x -> exp(gamma*x), gamma != 0.  Finite at both endpoints."""
    g = float(gamma)
    if g == 0.0:
        raise GeneratorError("exponential generator needs a nonzero rate")
    return Generator(
        name=f"exponential({g:g})",
        fn=_wrap(lambda x: np.exp(g * x)),
        inv=_wrap(lambda y: np.log(y) / g),
        increasing=g > 0,
        at_zero=1.0,
        at_one=math.exp(g),
        kind="exponential",
        param=g,
    )


def logarithm() -> Generator:
    """x -> log x; f(0) = -inf."""
    return Generator(
        name="logarithm",
        fn=_wrap(np.log),
        inv=_wrap(np.exp),
        increasing=True,
        at_zero=-INF,
        at_one=0.0,
        kind="logarithm",
        param=None,
    )


def logit() -> Generator:
    """x -> log(x/(1-x)); infinite at both endpoints."""
    return Generator(
        name="logit",
        fn=_wrap(_logit_fn),
        inv=_wrap(expit),
        increasing=True,
        at_zero=-INF,
        at_one=INF,
        kind="logit",
        param=None,
    )


def negated_log() -> Generator:
    """x -> -log x; the additive generator of the product t-norm (strict)."""
    return Generator(
        name="negated_log",
        fn=_wrap(lambda x: -np.log(x)),
        inv=_wrap(lambda y: np.exp(-y)),
        increasing=False,
        at_zero=INF,
        at_one=0.0,
        kind="negated_log",
        param=None,
    )


def negated_log_complement() -> Generator:
    """x -> -log(1-x); the additive generator of the probabilistic sum (strict)."""
    return Generator(
        name="negated_log_complement",
        fn=_wrap(lambda x: -np.log1p(-x)),
        inv=_wrap(lambda y: -np.expm1(-y)),
        increasing=True,
        at_zero=0.0,
        at_one=INF,
        kind="negated_log_complement",
        param=None,
    )


def one_minus() -> Generator:
    """x -> 1-x; the nilpotent t-norm generator with t(0) = 1."""
    return Generator(
        name="one_minus",
        fn=_wrap(lambda x: 1.0 - x),
        inv=_wrap(lambda y: 1.0 - y),
        increasing=False,
        at_zero=1.0,
        at_one=0.0,
        kind="one_minus",
        param=None,
    )


def identity() -> Generator:
    return Generator(
        name="identity",
        fn=_wrap(lambda x: x + 0.0),
        inv=_wrap(lambda y: y + 0.0),
        increasing=True,
        at_zero=0.0,
        at_one=1.0,
        kind="identity",
        param=None,
    )


BUILTIN_KINDS = {
    "power": power,
    "exponential": exponential,
    "logarithm": logarithm,
    "logit": logit,
    "negated_log": negated_log,
    "negated_log_complement": negated_log_complement,
    "one_minus": one_minus,
    "identity": identity,
}

_PARAMETRIC_KINDS = {"power": "gamma", "exponential": "gamma"}


def generator_from_config(spec: dict) -> Generator:
    """Build a builtin generator from a config mapping like {"kind": "power", "gamma": 2.0}."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise GeneratorError(f"generator spec must be a mapping with a 'kind' key, got {spec!r}")
    kind = spec["kind"]
    if kind not in BUILTIN_KINDS:
        known = ", ".join(sorted(BUILTIN_KINDS))
        raise GeneratorError(f"unknown generator kind {kind!r}; supported kinds: {known}")
    if kind in _PARAMETRIC_KINDS:
        pname = _PARAMETRIC_KINDS[kind]
        if pname not in spec:
            raise GeneratorError(f"generator kind {kind!r} requires a {pname!r} parameter")
        return BUILTIN_KINDS[kind](float(spec[pname]))
    return BUILTIN_KINDS[kind]()


# ---------------------------------------------------------------------------
# Closed-form shape registry
# ---------------------------------------------------------------------------

# Coefficients (c0, c1, c2) of R(x) = x(1-x) * f''(x)/f'(x) per builtin kind.
# Affine kinds contribute zero; the postcomposed sign flip of negated_log
# leaves f''/f' unchanged, so it shares the logarithm row.


def _r_coeffs(gen: Generator) -> tuple[float, float, float] | None:
    if gen.kind is None:
        return None
    if gen.kind in ("identity", "one_minus"):
        return (0.0, 0.0, 0.0)
    if gen.kind == "power":
        g = float(gen.param)
        return (g - 1.0, -(g - 1.0), 0.0)
    if gen.kind == "exponential":
        g = float(gen.param)
        return (0.0, g, -g)
    if gen.kind in ("logarithm", "negated_log"):
        return (-1.0, 1.0, 0.0)
    if gen.kind == "negated_log_complement":
        return (0.0, 1.0, 0.0)
    if gen.kind == "logit":
        return (-1.0, 2.0, 0.0)
    return None


def _quadratic_sign_on_unit(c0: float, c1: float, c2: float,
                            coeff_tol: float = 1e-12,
                            edge: float = 1e-9) -> str:
    """Sign pattern of c0 + c1*x + c2*x^2 on the open interval (0,1).

    Returns 'zero', 'pos', 'neg', or 'mixed'.  Roots within ``edge`` of the
    boundary do not count as interior sign changes.
    """
    scale = max(abs(c0), abs(c1), abs(c2))
    if scale <= coeff_tol:
        return "zero"

    def val(x: float) -> float:
        return c0 + c1 * x + c2 * x * x

    roots: list[float] = []
    if abs(c2) > coeff_tol * max(1.0, scale):
        disc = c1 * c1 - 4.0 * c0 * c2
        if disc > (coeff_tol * scale) ** 2:
            sq = math.sqrt(disc)
            roots = [(-c1 - sq) / (2.0 * c2), (-c1 + sq) / (2.0 * c2)]
        # a double root (disc ~ 0) never changes sign
    elif abs(c1) > coeff_tol * max(1.0, scale):
        roots = [-c0 / c1]

    interior = sorted(r for r in roots if edge < r < 1.0 - edge)
    cuts = [edge] + interior + [1.0 - edge]
    has_pos = has_neg = False
    for a, b in zip(cuts[:-1], cuts[1:]):
        v = val(0.5 * (a + b))
        if v > coeff_tol * scale:
            has_pos = True
        elif v < -coeff_tol * scale:
            has_neg = True
    if has_pos and has_neg:
        return "mixed"
    if has_pos:
        return "pos"
    if has_neg:
        return "neg"
    return "zero"


def registry_composite_shape(f: Generator, g: Generator) -> ShapeInfo | None:
    """Exact convexity class of g o f^{-1} on f((0,1)) for builtin pairs.

    Returns None when either generator lacks a registry row.  Only this path
    may emit the strict classes.
    """
    cf = _r_coeffs(f)
    cg = _r_coeffs(g)
    if cf is None or cg is None:
        return None
    n = tuple(a - b for a, b in zip(cg, cf))
    pattern = _quadratic_sign_on_unit(*n)
    mono = (
        Monotonicity.STRICTLY_INCREASING
        if f.increasing == g.increasing
        else Monotonicity.STRICTLY_DECREASING
    )
    dir_g = 1.0 if g.increasing else -1.0
    if pattern == "zero":
        return ShapeInfo(Convexity.AFFINE, mono)
    if pattern == "mixed":
        return ShapeInfo(Convexity.MIXED, mono)
    signed = dir_g if pattern == "pos" else -dir_g
    conv = Convexity.STRICTLY_CONVEX if signed > 0 else Convexity.STRICTLY_CONCAVE
    return ShapeInfo(conv, mono)


def generator_shape(gen: Generator) -> ShapeInfo | None:
    """Shape of the generator itself on (0,1) (composite with the identity)."""
    return registry_composite_shape(identity(), gen)


# ---------------------------------------------------------------------------
# Sampling helpers and the numerical classifier
# ---------------------------------------------------------------------------


def sample_open_interval(lo: float, hi: float, n: int) -> np.ndarray:
    """n interior points of (lo, hi); infinite endpoints are reached through
    fixed smooth bijections from (0,1)."""
    if not lo < hi:
        raise ValueError(f"degenerate interval ({lo!r}, {hi!r})")
    t = (np.arange(n) + 0.5) / n
    lo_f, hi_f = math.isfinite(lo), math.isfinite(hi)
    if lo_f and hi_f:
        return lo + (hi - lo) * t
    if lo_f:
        return lo + t / (1.0 - t)
    if hi_f:
        return hi - (1.0 - t) / t
    return np.tan(np.pi * (t - 0.5))


def _call_vectorized(fn, xs: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        try:
            out = np.asarray(fn(xs), dtype=float)
            if out.shape == xs.shape:
                return out
        except (TypeError, ValueError):
            pass
        return np.array([float(fn(float(v))) for v in xs])


def classify_convexity_numeric(fn, domain: tuple[float, float],
                               n: int = 2001,
                               step_floor: float = 1e-4,
                               threshold: float = 1e-10) -> ShapeInfo:
    """Second-difference convexity scan of ``fn`` over ``domain``.

    Symmetric second differences fn(y+d) - 2 fn(y) + fn(y-d) are compared
    against ``threshold`` plus a per-point round-off guard proportional to
    the local function magnitude.  With d ~ 1e-4 a sign registers once the
    curvature reaches roughly 1e-2 somewhere in the domain (round-off sits
    near 1e-15, five orders below the threshold), which is sensitive enough
    for every pairing of the builtin generators while staying silent on
    affine maps.  Emits only CONVEX / CONCAVE / MIXED / UNKNOWN, never the
    strict classes, and UNKNOWN rather than AFFINE when nothing registers.
    """
    lo, hi = domain
    ys = sample_open_interval(lo, hi, n)
    if math.isfinite(lo) and math.isfinite(hi):
        steps = np.full_like(ys, max(step_floor, step_floor * (hi - lo)))
    else:
        steps = np.maximum(step_floor, step_floor * np.abs(ys))
    ok = (ys - steps > lo) & (ys + steps < hi)
    ys, steps = ys[ok], steps[ok]
    if ys.size < 8:
        return ShapeInfo(Convexity.UNKNOWN, Monotonicity.UNKNOWN)

    up = _call_vectorized(fn, ys + steps)
    mid = _call_vectorized(fn, ys)
    dn = _call_vectorized(fn, ys - steps)
    d2 = up - 2.0 * mid + dn
    d1 = up - dn
    fscale = np.maximum.reduce([np.abs(up), np.abs(mid), np.abs(dn), np.ones_like(mid)])
    finite = np.isfinite(d2) & np.isfinite(d1)
    d2, d1, fscale = d2[finite], d1[finite], fscale[finite]
    if d2.size < 8:
        return ShapeInfo(Convexity.UNKNOWN, Monotonicity.UNKNOWN)

    guard = np.maximum(threshold, 512.0 * np.finfo(float).eps * fscale)
    has_pos = bool(np.any(d2 > guard))
    has_neg = bool(np.any(d2 < -guard))
    if has_pos and has_neg:
        conv = Convexity.MIXED
    elif has_pos:
        conv = Convexity.CONVEX
    elif has_neg:
        conv = Convexity.CONCAVE
    else:
        conv = Convexity.UNKNOWN

    inc = bool(np.any(d1 > guard))
    dec = bool(np.any(d1 < -guard))
    mono = Monotonicity.NON_MONOTONE if (inc and dec) else Monotonicity.UNKNOWN
    return ShapeInfo(conv, mono)


# ---------------------------------------------------------------------------
# Composite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Composite:
    """The map g o f^{-1} on the open interval f((0,1)), with its shape."""

    fn: Callable
    domain: tuple[float, float]
    shape: ShapeInfo
    f: Generator
    g: Generator

    def __call__(self, y):
        return self.fn(y)


def composite(f: Generator, g: Generator, n: int = 2001) -> Composite:
    """Build g o f^{-1} with its convexity classification.

    Uses the closed-form registry when both generators are builtin; otherwise
    classifies numerically (which never yields a strict class).
    """
    validate_generator(f)
    validate_generator(g)

    def fn(y):
        with np.errstate(all="ignore"):
            return g.fn(f.inv(np.asarray(y, dtype=float)))

    domain = f.range_open()
    shape = registry_composite_shape(f, g)
    if shape is None:
        conv = classify_convexity_numeric(fn, domain, n=n).convexity
        # monotonicity is structural: a composite of validated strictly
        # monotone maps is strictly monotone with the combined direction
        mono = (
            Monotonicity.STRICTLY_INCREASING
            if f.increasing == g.increasing
            else Monotonicity.STRICTLY_DECREASING
        )
        shape = ShapeInfo(conv, mono)
    return Composite(fn=fn, domain=domain, shape=shape, f=f, g=g)


# ---------------------------------------------------------------------------
# Collision gap and scans
# ---------------------------------------------------------------------------


def collision_gap(x: float, t1: float, t2: float, v1: float, v2: float, h) -> float:
    """Signed gap between v2-weighted means of h at two endpoint pairs that
    share the same v1-weighted mean.

    The deformed pair is (t1 + v1*x, t2 - (1-v1)*x); a zero at some x > 0 is
    exactly a simultaneous collision of both weighted means.
    """
    if not t1 < t2:
        raise ValueError(f"need t1 < t2, got ({t1!r}, {t2!r})")
    if not (0.0 < v1 < 1.0 and 0.0 < v2 < 1.0):
        raise ValueError("weights v1, v2 must lie in (0,1)")
    if not 0.0 <= x <= (t2 - t1) * (1.0 + 1e-12):
        raise ValueError(f"deformation x={x!r} outside [0, t2-t1]")
    x = min(float(x), t2 - t1)
    a = float(h(t1 + v1 * x)) - float(h(t1))
    b = float(h(t2 - (1.0 - v1) * x)) - float(h(t2))
    return (1.0 - v2) * a + v2 * b


def _gap_values(xs: np.ndarray, t1: float, t2: float, v1: float, v2: float, h) -> np.ndarray:
    a = _call_vectorized(h, t1 + v1 * xs) - float(h(t1))
    b = _call_vectorized(h, t2 - (1.0 - v1) * xs) - float(h(t2))
    return (1.0 - v2) * a + v2 * b


class ScanOutcome(Enum):
    CLEAR = "clear"            # gap bounded away from zero with constant sign
    COLLISION = "collision"    # a zero (or sign change) was located
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ScanResult:
    outcome: ScanOutcome
    location: tuple[float, float, float] | None = None  # (x, t1, t2)
    sign: int | None = None

    ZERO_TOL = 1e-12
    CLEAR_TOL = 1e-9


def _domain_samples(domain: tuple[float, float], n: int) -> np.ndarray:
    lo, hi = domain
    if math.isfinite(lo) and math.isfinite(hi):
        return np.linspace(lo, hi, n)
    return sample_open_interval(lo, hi, n)


def _bisect_gap_zero(h, v1, v2, t1, t2, xa, xb, ga, gb, iters: int = 200) -> float:
    """Bisect a bracketed sign change of the gap along the x axis."""
    for _ in range(iters):
        xm = 0.5 * (xa + xb)
        gm = collision_gap(xm, t1, t2, v1, v2, h)
        if gm == 0.0:
            return xm
        if (gm > 0) == (ga > 0):
            xa, ga = xm, gm
        else:
            xb, gb = xm, gm
        if xb - xa <= 1e-17 * max(1.0, abs(xb)):
            break
    return 0.5 * (xa + xb)


def collision_scan(h, domain: tuple[float, float], v1: float, v2: float,
                   resolution: int = 32) -> ScanResult:
    """Grid search for zeros of the collision gap over endpoint pairs in
    ``domain`` and deformations x in (0, t2-t1].

    CLEAR requires |gap| >= 1e-9 with one constant sign across all samples;
    COLLISION is reported on a sign change (refined by bisection) or when the
    gap sits below 1e-12 with a corroborating pattern (flanking opposite
    signs, or an entire flat line as with an affine h at equal weights).
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    ts = _domain_samples(domain, resolution)
    n_x = min(64, max(16, resolution))
    signs_seen: set[int] = set()
    min_abs = math.inf
    suspicious = False
    for i in range(len(ts) - 1):
        for j in range(i + 1, len(ts)):
            t1, t2 = float(ts[i]), float(ts[j])
            xs = np.linspace(0.0, t2 - t1, n_x + 1)[1:]
            gs = _gap_values(xs, t1, t2, v1, v2, h)
            if not np.all(np.isfinite(gs)):
                suspicious = True
                continue
            tiny = np.abs(gs) < ScanResult.ZERO_TOL
            if np.all(tiny):
                x_mid = float(xs[len(xs) // 2])
                return ScanResult(ScanOutcome.COLLISION, (x_mid, t1, t2), 0)
            pos = gs > ScanResult.ZERO_TOL
            neg = gs < -ScanResult.ZERO_TOL
            if np.any(pos) and np.any(neg):
                k = int(np.argmax(pos[:-1] != pos[1:]))
                xa, xb = float(xs[k]), float(xs[k + 1])
                ga, gb = float(gs[k]), float(gs[k + 1])
                if (ga > 0) == (gb > 0):
                    # the flip happens further along; locate it directly
                    flip = np.nonzero(pos[:-1] & neg[1:] | neg[:-1] & pos[1:])[0]
                    if flip.size:
                        k = int(flip[0])
                        xa, xb = float(xs[k]), float(xs[k + 1])
                        ga, gb = float(gs[k]), float(gs[k + 1])
                x0 = _bisect_gap_zero(h, v1, v2, t1, t2, xa, xb, ga, gb)
                return ScanResult(ScanOutcome.COLLISION, (x0, t1, t2), 0)
            if np.any(tiny):
                # isolated grazing values: cannot certify either way
                suspicious = True
            if np.any(pos):
                signs_seen.add(1)
            elif np.any(neg):
                signs_seen.add(-1)
            min_abs = min(min_abs, float(np.min(np.abs(gs))))
    if len(signs_seen) == 2:
        # opposite signs on different endpoint pairs: a zero exists along a
        # continuous path between them (located by the caller if needed)
        return ScanResult(ScanOutcome.INCONCLUSIVE)
    if not suspicious and min_abs >= ScanResult.CLEAR_TOL and len(signs_seen) == 1:
        return ScanResult(ScanOutcome.CLEAR, sign=signs_seen.pop())
    return ScanResult(ScanOutcome.INCONCLUSIVE)


def find_collision(h, domain: tuple[float, float], v1: float, v2: float,
                   resolution: int = 48) -> tuple[float, float, float] | None:
    """Locate (x, t1, t2) with a near-zero collision gap, or None.

    Unlike :func:`collision_scan` this also chases sign changes *across*
    endpoint pairs by bisecting along the straight path connecting them,
    which settles the case where every single pair keeps one sign.
    """
    res = collision_scan(h, domain, v1, v2, max(16, resolution))
    if res.outcome is ScanOutcome.COLLISION:
        return res.location

    # Full-deformation gap U(t1,t2) = gap(t2-t1, t1, t2); a sign change of U
    # between two endpoint pairs yields a zero along the connecting path.
    ts = _domain_samples(domain, resolution)
    pairs = []
    for i in range(len(ts) - 1):
        for j in range(i + 1, len(ts)):
            t1, t2 = float(ts[i]), float(ts[j])
            u = collision_gap(t2 - t1, t1, t2, v1, v2, h)
            if math.isfinite(u):
                pairs.append((t1, t2, u))
    pos = [p for p in pairs if p[2] > ScanResult.ZERO_TOL]
    neg = [p for p in pairs if p[2] < -ScanResult.ZERO_TOL]
    if not pos or not neg:
        return None
    (a1, a2, ua) = pos[0]
    (b1, b2, ub) = neg[0]

    def u_along(lmb: float) -> tuple[float, float, float]:
        t1 = (1.0 - lmb) * a1 + lmb * b1
        t2 = (1.0 - lmb) * a2 + lmb * b2
        if t2 - t1 <= 0:
            return t1, t2, math.nan
        return t1, t2, collision_gap(t2 - t1, t1, t2, v1, v2, h)

    la, lb = 0.0, 1.0
    for _ in range(200):
        lm = 0.5 * (la + lb)
        t1, t2, um = u_along(lm)
        if not math.isfinite(um) or um == 0.0:
            break
        if (um > 0) == (ua > 0):
            la = lm
        else:
            lb = lm
    t1, t2, um = u_along(0.5 * (la + lb))
    if math.isfinite(um) and t2 > t1:
        return (t2 - t1, t1, t2)
    return None
