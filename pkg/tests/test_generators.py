import math

import numpy as np
import pytest

from intervalorders import (
    Convexity,
    Generator,
    GeneratorError,
    Monotonicity,
    ScanOutcome,
    classify_convexity_numeric,
    collision_gap,
    collision_scan,
    composite,
    exponential,
    find_collision,
    generator_from_config,
    generator_shape,
    identity,
    logarithm,
    logit,
    negated_log,
    negated_log_complement,
    one_minus,
    power,
    registry_composite_shape,
    validate_generator,
)

ALL_BUILTINS = [
    power(2.0), power(0.5), power(-1.0), exponential(1.0), exponential(-1.0),
    logarithm(), logit(), negated_log(), negated_log_complement(),
    one_minus(), identity(),
]


class TestBuiltins:
    @pytest.mark.parametrize("gen", ALL_BUILTINS, ids=lambda g: g.name)
    def test_contract(self, gen):
        validate_generator(gen)
        assert float(gen.fn(0.0)) == pytest.approx(gen.at_zero, abs=1e-12) or (
            math.isinf(gen.at_zero) and float(gen.fn(0.0)) == gen.at_zero
        )
        assert float(gen.fn(1.0)) == pytest.approx(gen.at_one, abs=1e-12) or (
            math.isinf(gen.at_one) and float(gen.fn(1.0)) == gen.at_one
        )

    def test_negative_power_blows_up_at_zero(self):
        g = power(-2.0)
        assert g.at_zero == math.inf
        assert not g.increasing

    def test_logit_endpoints(self):
        g = logit()
        assert float(g.fn(0.0)) == -math.inf
        assert float(g.fn(1.0)) == math.inf
        assert float(g.inv(0.0)) == pytest.approx(0.5)

    def test_validation_rejects_non_monotone(self):
        bad = Generator(
            name="wiggle",
            fn=lambda x: np.sin(6 * np.asarray(x, float)),
            inv=lambda y: np.arcsin(np.asarray(y, float)) / 6,
            increasing=True,
            at_zero=0.0,
            at_one=math.sin(6.0),
        )
        with pytest.raises(GeneratorError):
            validate_generator(bad)

    def test_validation_rejects_bad_inverse(self):
        bad = Generator(
            name="skewed",
            fn=lambda x: np.asarray(x, float) ** 2,
            inv=lambda y: np.asarray(y, float),  # not the inverse
            increasing=True,
            at_zero=0.0,
            at_one=1.0,
        )
        with pytest.raises(GeneratorError):
            validate_generator(bad)

    def test_config_parsing(self):
        g = generator_from_config({"kind": "power", "gamma": 2.0})
        assert g.kind == "power" and g.param == 2.0
        assert generator_from_config({"kind": "logit"}).kind == "logit"

    def test_config_unknown_kind_lists_supported(self):
        with pytest.raises(GeneratorError, match="supported kinds"):
            generator_from_config({"kind": "spline"})

    def test_config_missing_parameter(self):
        with pytest.raises(GeneratorError, match="gamma"):
            generator_from_config({"kind": "exponential"})


EXPECTED_SHAPES = [
    # (f, g, convexity, increasing?)
    (power(2.0), power(0.5), Convexity.STRICTLY_CONCAVE, True),
    (power(0.5), power(2.0), Convexity.STRICTLY_CONVEX, True),
    (identity(), identity(), Convexity.AFFINE, True),
    (identity(), power(2.0), Convexity.STRICTLY_CONVEX, True),
    (identity(), one_minus(), Convexity.AFFINE, False),
    (logarithm(), exponential(-1.0), Convexity.STRICTLY_CONCAVE, False),
    (logarithm(), exponential(1.0), Convexity.STRICTLY_CONVEX, True),
    (logarithm(), exponential(-2.0), Convexity.MIXED, False),
    (logarithm(), power(2.0), Convexity.STRICTLY_CONVEX, True),
    (power(2.0), logarithm(), Convexity.STRICTLY_CONCAVE, True),
    (power(-1.0), logarithm(), Convexity.STRICTLY_CONVEX, False),
    (logit(), exponential(1.0), Convexity.MIXED, True),
    (logit(), exponential(-3.0), Convexity.MIXED, False),
    (logit(), power(2.0), Convexity.MIXED, True),
    (logit(), power(-1.0), Convexity.STRICTLY_CONVEX, False),
    (logit(), logarithm(), Convexity.STRICTLY_CONCAVE, True),
    (logarithm(), logit(), Convexity.STRICTLY_CONVEX, True),
    (negated_log(), negated_log_complement(), Convexity.STRICTLY_CONVEX, False),
    (negated_log_complement(), negated_log(), Convexity.STRICTLY_CONVEX, False),
    (negated_log(), negated_log(), Convexity.AFFINE, True),
    (exponential(1.0), exponential(2.0), Convexity.STRICTLY_CONVEX, True),
    (exponential(2.0), exponential(1.0), Convexity.STRICTLY_CONCAVE, True),
    (exponential(1.0), exponential(-1.0), Convexity.STRICTLY_CONVEX, False),
    (exponential(-1.0), logarithm(), Convexity.STRICTLY_CONCAVE, False),
    (exponential(-2.0), logarithm(), Convexity.MIXED, False),
    # boundary of the concavity region sits exactly on the excluded endpoint
    (power(0.5), exponential(-0.5), Convexity.STRICTLY_CONCAVE, False),
    (power(2.0), exponential(1.0), Convexity.STRICTLY_CONCAVE, True),
    (power(2.0), exponential(1.5), Convexity.MIXED, True),
    (power(0.5), exponential(2.0), Convexity.STRICTLY_CONVEX, True),
]


class TestRegistryShapes:
    @pytest.mark.parametrize(
        "f,g,conv,inc", EXPECTED_SHAPES,
        ids=[f"{f.name}->{g.name}" for f, g, _, _ in EXPECTED_SHAPES],
    )
    def test_expected_classification(self, f, g, conv, inc):
        shape = registry_composite_shape(f, g)
        assert shape is not None
        assert shape.convexity is conv
        expected_mono = (
            Monotonicity.STRICTLY_INCREASING if inc else Monotonicity.STRICTLY_DECREASING
        )
        assert shape.monotonicity is expected_mono

    def test_generator_shape_of_power(self):
        assert generator_shape(power(2.0)).convexity is Convexity.STRICTLY_CONVEX
        assert generator_shape(power(0.5)).convexity is Convexity.STRICTLY_CONCAVE
        assert generator_shape(identity()).convexity is Convexity.AFFINE

    def test_unknown_for_custom_generator(self):
        custom = Generator(
            name="cubic-blend",
            fn=lambda x: np.asarray(x, float) ** 3,
            inv=lambda y: np.cbrt(np.asarray(y, float)),
            increasing=True,
            at_zero=0.0,
            at_one=1.0,
        )
        assert registry_composite_shape(custom, identity()) is None


class TestComposite:
    def test_quarter_power_map_and_shape(self):
        comp = composite(power(2.0), power(0.5))
        ys = np.linspace(0.05, 0.95, 11)
        assert np.allclose(comp(ys), ys**0.25, atol=1e-12)
        assert comp.shape.convexity is Convexity.STRICTLY_CONCAVE
        assert comp.domain == (0.0, 1.0)
        # concavity confirmed by independent second differences
        d = 1e-4
        second = comp(ys + d) - 2 * comp(ys) + comp(ys - d)
        assert np.all(second < 0)

    def test_identity_composite_affine(self):
        comp = composite(identity(), identity())
        assert comp.shape.convexity is Convexity.AFFINE

    def test_log_exponential_domain(self):
        comp = composite(logarithm(), exponential(-1.0))
        assert comp.domain == (-math.inf, 0.0)
        assert comp.shape.convexity is Convexity.STRICTLY_CONCAVE
        ys = np.array([-3.0, -1.0, -0.1])
        assert np.allclose(comp(ys), np.exp(-np.exp(ys)), atol=1e-12)

    def test_strict_product_conorm_composite_convex(self):
        # -log(1 - e^(-y)) on (0, inf): hand-checked second derivative
        # e^y / (e^y - 1)^2 is positive everywhere
        comp = composite(negated_log(), negated_log_complement())
        ys = np.linspace(0.2, 4.0, 9)
        expected = -np.log1p(-np.exp(-ys))
        assert np.allclose(comp(ys), expected, atol=1e-12)
        d = 1e-4
        second = comp(ys + d) - 2 * comp(ys) + comp(ys - d)
        assert np.all(second > 0)

    def test_numeric_path_for_custom_generator(self):
        custom = Generator(
            name="cubic",
            fn=lambda x: np.asarray(x, float) ** 3,
            inv=lambda y: np.cbrt(np.asarray(y, float)),
            increasing=True,
            at_zero=0.0,
            at_one=1.0,
        )
        comp = composite(custom, identity())
        # y^(1/3) is concave on (0,1); strictness must not be claimed
        assert comp.shape.convexity is Convexity.CONCAVE
        assert comp.shape.monotonicity is Monotonicity.STRICTLY_INCREASING


NUMERIC_AGREEMENT = [
    (power(2.0), power(0.5)),
    (power(0.5), power(2.0)),
    (logarithm(), exponential(1.0)),
    (logarithm(), exponential(-1.0)),
    (logit(), exponential(1.0)),
    (logit(), power(2.0)),
    (negated_log(), negated_log_complement()),
    (exponential(1.0), exponential(2.0)),
    (power(2.0), exponential(1.5)),
    (power(-1.0), logarithm()),
]


class TestNumericClassifier:
    @pytest.mark.parametrize(
        "f,g", NUMERIC_AGREEMENT,
        ids=[f"{f.name}->{g.name}" for f, g in NUMERIC_AGREEMENT],
    )
    def test_agrees_with_registry_nonstrict(self, f, g):
        registry = registry_composite_shape(f, g)
        comp = composite(f, g)
        numeric = classify_convexity_numeric(comp.fn, comp.domain)
        mapping = {
            Convexity.STRICTLY_CONVEX: Convexity.CONVEX,
            Convexity.STRICTLY_CONCAVE: Convexity.CONCAVE,
            Convexity.MIXED: Convexity.MIXED,
        }
        assert numeric.convexity is mapping[registry.convexity]

    def test_affine_reports_unknown(self):
        # zero curvature never registers, and strictness is never invented
        numeric = classify_convexity_numeric(lambda y: 2.0 * np.asarray(y) + 1.0, (0.0, 1.0))
        assert numeric.convexity is Convexity.UNKNOWN


class TestCollisionGap:
    def test_zero_at_origin(self):
        assert collision_gap(0.0, 0.1, 0.9, 0.3, 0.7, lambda x: x**2) == 0.0

    def test_affine_closed_form(self):
        # for h(x) = a*x + b the gap is a*(v1 - v2)*x identically
        a_coef = 4.0
        for v1, v2, x in [(0.3, 0.6, 0.5), (0.7, 0.2, 0.25), (0.5, 0.5, 0.4)]:
            got = collision_gap(x, 0.1, 0.95, v1, v2, lambda t: a_coef * t + 2.0)
            assert got == pytest.approx(a_coef * (v1 - v2) * x, abs=1e-12)

    def test_square_full_deformation_value(self):
        # equal weights 0.5 at full deformation reduce to the midpoint defect
        # h(0.5) - 0.5 h(0) - 0.5 h(1) = -0.25 for h(x) = x^2
        got = collision_gap(1.0, 0.0, 1.0, 0.5, 0.5, lambda x: x**2)
        assert got == pytest.approx(-0.25, abs=1e-15)

    def test_rejects_deformation_outside_range(self):
        with pytest.raises(ValueError):
            collision_gap(0.9, 0.0, 0.5, 0.5, 0.5, lambda x: x)
        with pytest.raises(ValueError):
            collision_gap(0.1, 0.5, 0.2, 0.5, 0.5, lambda x: x)

    def test_strictly_convex_equal_weights_negative_everywhere(self):
        ts = np.linspace(0.0, 1.0, 12)
        for v in (0.25, 0.5, 0.75):
            for i in range(len(ts) - 1):
                for j in range(i + 1, len(ts)):
                    t1, t2 = float(ts[i]), float(ts[j])
                    for x in np.linspace(0.0, t2 - t1, 8)[1:]:
                        assert collision_gap(x, t1, t2, v, v, lambda s: s**2) < 0
                        assert collision_gap(x, t1, t2, v, v, math.exp) < 0

    def test_strictly_concave_equal_weights_positive_everywhere(self):
        ts = np.linspace(0.05, 1.0, 10)
        for i in range(len(ts) - 1):
            for j in range(i + 1, len(ts)):
                t1, t2 = float(ts[i]), float(ts[j])
                for x in np.linspace(0.0, t2 - t1, 6)[1:]:
                    assert collision_gap(x, t1, t2, 0.5, 0.5, math.sqrt) > 0

    def test_convex_in_deformation_for_convex_h(self):
        # midpoint inequality along the deformation axis
        t1, t2, v1, v2 = 0.1, 0.9, 0.35, 0.6
        xs = np.linspace(0.0, t2 - t1, 9)
        h = lambda s: s**2
        for xa, xb in zip(xs[:-2], xs[2:]):
            mid = 0.5 * (xa + xb)
            lhs = collision_gap(mid, t1, t2, v1, v2, h)
            rhs = 0.5 * (collision_gap(xa, t1, t2, v1, v2, h)
                         + collision_gap(xb, t1, t2, v1, v2, h))
            assert lhs <= rhs + 1e-12


class TestCollisionScan:
    def test_convex_equal_weights_clear_negative(self):
        r = collision_scan(lambda x: np.asarray(x) ** 2, (0.0, 1.0), 0.5, 0.5, 24)
        assert r.outcome is ScanOutcome.CLEAR
        assert r.sign == -1

    def test_affine_equal_weights_collides_identically(self):
        r = collision_scan(lambda x: 2.0 * np.asarray(x) + 1.0, (0.0, 1.0), 0.5, 0.5, 24)
        assert r.outcome is ScanOutcome.COLLISION
        x0, t1, t2 = r.location
        assert 0.0 < x0 <= t2 - t1

    def test_affine_distinct_weights_clear(self):
        r = collision_scan(lambda x: 2.0 * np.asarray(x) + 1.0, (0.0, 1.0), 0.3, 0.6, 24)
        assert r.outcome is ScanOutcome.CLEAR

    def test_sqrt_window_with_spread_weights_clear(self):
        # increasing and strictly concave, yet collision-free for these
        # weights: the scan must not require a convexity match
        r = collision_scan(lambda x: np.sqrt(np.asarray(x)), (1.0, 2.0), 0.4, 0.6, 24)
        assert r.outcome is ScanOutcome.CLEAR
        assert r.sign == -1

    def test_rejects_low_resolution(self):
        with pytest.raises(ValueError):
            collision_scan(lambda x: x, (0.0, 1.0), 0.5, 0.5, 8)

    def test_find_collision_refines_to_near_zero(self):
        loc = find_collision(lambda x: np.sqrt(np.asarray(x)), (1.0, 2.0), 0.45, 0.5, 24)
        assert loc is not None
        x0, t1, t2 = loc
        assert abs(collision_gap(x0, t1, t2, 0.45, 0.5, math.sqrt)) < 1e-10


class TestScanShapeDispatch:
    """For strictly increasing h, clear scans across all weight pairs
    v1 < v2 line up exactly with convexity of h."""

    CONVEX = [
        (lambda x: np.asarray(x) ** 2, (0.0, 1.0)),
        (lambda x: np.exp(np.asarray(x)), (0.0, 1.0)),
    ]
    NON_CONVEX = [
        (lambda x: np.sqrt(np.asarray(x)), (1.0, 2.0)),       # concave increasing
        (lambda x: np.asarray(x) ** 3, (-1.0, 1.0)),          # mixed increasing
    ]

    def _pairs(self):
        grid = [0.1 * k for k in range(1, 10)]
        near = [(v, v + 0.05) for v in (0.3, 0.45, 0.6)]
        return [(v1, v2) for v1 in grid for v2 in grid if v1 < v2] + near

    def test_convex_scans_clear_for_every_increasing_weight_pair(self):
        for h, dom in self.CONVEX:
            for v1, v2 in self._pairs():
                assert collision_scan(h, dom, v1, v2, 16).outcome is ScanOutcome.CLEAR

    def test_non_convex_fails_for_some_increasing_weight_pair(self):
        for h, dom in self.NON_CONVEX:
            outcomes = {
                collision_scan(h, dom, v1, v2, 16).outcome for v1, v2 in self._pairs()
            }
            assert ScanOutcome.COLLISION in outcomes
