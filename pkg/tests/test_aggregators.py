import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intervalorders import (
    AggregationError,
    Interval,
    aggregator_from_config,
    exponential,
    exponential_mean,
    geometric_mean,
    identity,
    k_mean,
    logarithm,
    logit_mean,
    negated_log,
    negated_log_complement,
    one_minus,
    power,
    quasi_linear_mean,
    root_power_mean,
    schur_pair_mean,
    tconorm,
    tconorm_eval,
    tnorm,
    tnorm_eval,
)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
weight = st.floats(min_value=0.01, max_value=0.99, allow_nan=False)

REPRESENTATIVES = [
    root_power_mean(2.0, 0.3),
    root_power_mean(-1.0, 0.7),
    exponential_mean(1.5, 0.5),
    geometric_mean(0.4),
    logit_mean(0.6),
    k_mean(0.0),
    k_mean(0.5),
    k_mean(1.0),
    schur_pair_mean(power(2.0)),
    schur_pair_mean(power(0.5)),
    tnorm(negated_log()),
    tnorm(one_minus()),
    tconorm(negated_log_complement()),
    tconorm(identity()),
]


class TestContract:
    @pytest.mark.parametrize("af", REPRESENTATIVES, ids=lambda a: a.name)
    def test_boundary_and_monotonicity_on_grid(self, af):
        assert af(Interval(0.0, 0.0)) == pytest.approx(0.0, abs=1e-12)
        assert af(Interval(1.0, 1.0)) == pytest.approx(1.0, abs=1e-12)
        # componentwise monotonicity over the full 101 x 101 endpoint grid:
        # nondecreasing along both coordinate directions implies it for every
        # dominated pair
        pts = np.linspace(0.0, 1.0, 101)
        lo_m, hi_m = np.meshgrid(pts, pts, indexing="ij")
        valid = lo_m <= hi_m
        vals = af.values(lo_m.ravel(), hi_m.ravel()).reshape(lo_m.shape)
        d_lo = vals[1:, :] - vals[:-1, :]
        ok_lo = valid[1:, :] & valid[:-1, :]
        assert np.all(d_lo[ok_lo] >= -1e-12)
        d_hi = vals[:, 1:] - vals[:, :-1]
        ok_hi = valid[:, 1:] & valid[:, :-1]
        assert np.all(d_hi[ok_hi] >= -1e-12)

    @pytest.mark.parametrize("af", REPRESENTATIVES, ids=lambda a: a.name)
    def test_values_inside_unit_range(self, af):
        los, his = np.meshgrid(np.linspace(0, 1, 21), np.linspace(0, 1, 21))
        mask = los <= his
        vals = af.values(los[mask], his[mask])
        assert np.all(np.isfinite(vals))
        assert np.all((vals >= 0.0) & (vals <= 1.0))


class TestQuasiLinear:
    def test_root_power_matches_direct_formula(self):
        w, gamma = 0.35, 2.5
        af = root_power_mean(gamma, w)
        los = np.array([0.0, 0.1, 0.4, 0.8])
        his = np.array([0.5, 0.9, 0.4, 1.0])
        direct = ((1 - w) * los**gamma + w * his**gamma) ** (1 / gamma)
        assert np.allclose(af.values(los, his), direct, atol=1e-12)

    def test_negative_power_sends_zero_interval_to_zero(self):
        af = root_power_mean(-1.0, 0.4)
        assert af(Interval(0.0, 0.7)) == 0.0

    def test_identity_generator_is_projection(self):
        af = quasi_linear_mean(identity(), 0.3)
        km = k_mean(0.3)
        los = np.linspace(0, 1, 17)
        his = np.clip(los + 0.2, 0, 1)
        assert np.allclose(af.values(los, his), km.values(los, his), atol=1e-15)

    def test_geometric_mean_exponent_convention(self):
        # the log generator yields u1^(1-w) * u2^w
        af = geometric_mean(0.3)
        u = Interval(0.4, 0.9)
        assert af(u) == pytest.approx(0.4**0.7 * 0.9**0.3, abs=1e-12)

    def test_geometric_mean_zero_absorbing(self):
        # f(0) = -inf forces the whole mean to 0 on [0, x]
        af = geometric_mean(0.5)
        assert af(Interval(0.0, 0.5)) == 0.0
        assert af(Interval(0.0, 1.0)) == 0.0

    def test_logit_mean_matches_odds_formula(self):
        w = 0.4
        af = logit_mean(w)
        for lo, hi in [(0.2, 0.7), (0.05, 0.95), (0.5, 0.5)]:
            num = lo ** (1 - w) * hi**w
            den = num + (1 - lo) ** (1 - w) * (1 - hi) ** w
            assert af(Interval(lo, hi)) == pytest.approx(num / den, abs=1e-12)

    def test_logit_mean_zero_over_zero_convention(self):
        af = logit_mean(0.4)
        assert af(Interval(0.0, 1.0)) == 0.0
        assert af(Interval(0.0, 0.3)) == 0.0
        assert af(Interval(0.6, 1.0)) == 1.0

    def test_exponential_mean_closed_form(self):
        gamma, w = 1.5, 0.25
        af = exponential_mean(gamma, w)
        u = Interval(0.2, 0.8)
        expected = math.log((1 - w) * math.exp(gamma * 0.2) + w * math.exp(gamma * 0.8)) / gamma
        assert af(u) == pytest.approx(expected, abs=1e-12)

    def test_rejects_degenerate_weight(self):
        with pytest.raises(AggregationError):
            quasi_linear_mean(identity(), 0.0)
        with pytest.raises(AggregationError):
            quasi_linear_mean(identity(), 1.0)

    @given(weight, unit)
    def test_idempotent_on_degenerate_intervals(self, w, a):
        af = root_power_mean(2.0, w)
        assert af(Interval(a, a)) == pytest.approx(a, abs=1e-9)

    @given(weight, unit, unit)
    def test_internality(self, w, a, b):
        lo, hi = min(a, b), max(a, b)
        af = exponential_mean(1.0, w)
        v = af(Interval(lo, hi))
        assert lo - 1e-9 <= v <= hi + 1e-9


class TestSchurPairMean:
    def test_square_values(self):
        af = schur_pair_mean(power(2.0))
        assert af(Interval(0.36, 0.82)) == pytest.approx(0.401, abs=1e-12)

    def test_identity_is_midpoint(self):
        af = schur_pair_mean(identity())
        km = k_mean(0.5)
        for lo, hi in [(0.1, 0.9), (0.3, 0.3), (0.0, 1.0)]:
            assert af(Interval(lo, hi)) == pytest.approx(km(Interval(lo, hi)), abs=1e-15)

    def test_sqrt_value(self):
        af = schur_pair_mean(power(0.5))
        assert af(Interval(0.25, 0.81)) == pytest.approx(0.70, abs=1e-12)

    def test_rejects_non_bijection(self):
        with pytest.raises(AggregationError):
            schur_pair_mean(exponential(1.0))  # f(0) = 1 != 0
        with pytest.raises(AggregationError):
            schur_pair_mean(one_minus())  # decreasing


class TestArchimedean:
    def test_product_from_negated_log(self):
        t = negated_log()
        for lo, hi in [(0.3, 0.8), (0.5, 0.5), (0.0, 0.7), (1.0, 1.0)]:
            assert tnorm_eval(t, Interval(lo, hi)) == pytest.approx(lo * hi, abs=1e-12)

    def test_lukasiewicz_from_one_minus(self):
        t = one_minus()
        for lo, hi in [(0.3, 0.8), (0.25, 0.25), (0.7, 0.9), (0.0, 1.0)]:
            assert tnorm_eval(t, Interval(lo, hi)) == pytest.approx(
                max(lo + hi - 1.0, 0.0), abs=1e-12
            )

    def test_tnorm_boundary(self):
        af = tnorm(negated_log())
        assert af(Interval(1.0, 1.0)) == 1.0
        assert af(Interval(0.0, 0.6)) == 0.0

    def test_probabilistic_sum(self):
        s = negated_log_complement()
        for lo, hi in [(0.3, 0.8), (0.5, 0.5), (0.2, 1.0)]:
            assert tconorm_eval(s, Interval(lo, hi)) == pytest.approx(
                lo + hi - lo * hi, abs=1e-12
            )

    def test_bounded_sum_from_identity(self):
        s = identity()
        for lo, hi in [(0.3, 0.8), (0.4999, 0.5), (0.7, 0.9)]:
            assert tconorm_eval(s, Interval(lo, hi)) == pytest.approx(
                min(lo + hi, 1.0), abs=1e-12
            )

    def test_tconorm_boundary(self):
        af = tconorm(identity())
        assert af(Interval(0.0, 0.0)) == 0.0
        assert af(Interval(0.4, 1.0)) == 1.0

    def test_tnorm_below_min_tconorm_above_max(self):
        t = tnorm(negated_log())
        s = tconorm(negated_log_complement())
        los, his = np.meshgrid(np.linspace(0, 1, 21), np.linspace(0, 1, 21))
        mask = los <= his
        lo, hi = los[mask], his[mask]
        assert np.all(t.values(lo, hi) <= lo + 1e-12)
        assert np.all(s.values(lo, hi) >= hi - 1e-12)

    def test_strict_tnorm_strictly_shrinks_diagonal(self):
        af = tnorm(negated_log())
        for x in np.linspace(0.05, 0.95, 10):
            assert af(Interval(x, x)) < x

    def test_strictness_classification(self):
        assert tnorm(negated_log()).descriptor.is_strict
        assert not tnorm(one_minus()).descriptor.is_strict
        assert tconorm(negated_log_complement()).descriptor.is_strict
        assert not tconorm(identity()).descriptor.is_strict

    def test_rejects_wrong_direction(self):
        with pytest.raises(AggregationError):
            tnorm(identity())
        with pytest.raises(AggregationError):
            tconorm(negated_log())


class TestConfig:
    def test_each_family(self):
        specs = [
            {"family": "quasi_linear", "generator": {"kind": "power", "gamma": 2.0},
             "weight": 0.5},
            {"family": "schur_pair", "f": {"kind": "power", "gamma": 2.0}},
            {"family": "tnorm", "generator": {"kind": "negated_log"}},
            {"family": "tconorm", "generator": {"kind": "negated_log_complement"}},
            {"family": "k", "w": 0.5},
        ]
        for spec in specs:
            af = aggregator_from_config(spec)
            assert af(Interval(1.0, 1.0)) == pytest.approx(1.0, abs=1e-12)

    def test_unknown_family_diagnostic(self):
        with pytest.raises(AggregationError, match="supported families"):
            aggregator_from_config({"family": "owa"})

    def test_missing_fields(self):
        with pytest.raises(AggregationError):
            aggregator_from_config({"family": "quasi_linear", "weight": 0.5})
        with pytest.raises(AggregationError):
            aggregator_from_config({"family": "k"})
