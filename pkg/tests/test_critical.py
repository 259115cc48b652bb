import math
import warnings

import numpy as np
import pytest
from scipy import stats

from logitbands.critical import (
    chi2_cdf,
    coverage,
    coverage_one_sided_closed,
    coverage_one_sided_quadrature,
    coverage_two_sided,
    coverage_two_sided_region,
    pointwise_quantile,
    scheffe_value,
    solve_critical,
)
from logitbands.geometry import interval_cone_angle

W_GRID = np.linspace(0.5, 4.0, 20)
PHI_GRID = np.linspace(0.0, math.pi, 22)[1:-1]  # 20 interior angles


class TestChi2:
    def test_zero(self):
        assert chi2_cdf(2, 0.0) == 0.0
        assert chi2_cdf(1, 0.0) == 0.0

    def test_df2_quantile(self):
        assert chi2_cdf(2, -2 * math.log(0.05)) == pytest.approx(0.95, abs=1e-15)
        assert chi2_cdf(2, 5.99146) == pytest.approx(0.95, abs=1e-6)

    def test_df1_quantile(self):
        assert chi2_cdf(1, 1.95996 ** 2) == pytest.approx(0.95, abs=1e-4)
        assert chi2_cdf(1, 3.8415) == pytest.approx(0.95, abs=1e-4)

    @pytest.mark.parametrize("df", [1, 2])
    def test_against_incomplete_gamma(self, df):
        x = np.linspace(0.0, 30.0, 301)
        np.testing.assert_allclose(chi2_cdf(df, x), stats.chi2.cdf(x, df), rtol=1e-13, atol=1e-15)

    def test_rejects_other_df(self):
        with pytest.raises(ValueError):
            chi2_cdf(3, 1.0)


class TestTwoSided:
    def test_published_point(self):
        assert coverage_two_sided(2.206, 0.809) == pytest.approx(0.95, abs=2e-3)

    @pytest.mark.parametrize("w", [0.3, 1.0, 2.447, 3.5])
    def test_half_plane_is_chi2(self, w):
        assert coverage_two_sided(w, math.pi) == -math.expm1(-w * w / 2)
        assert coverage(w, math.pi)[1] == 0.0

    def test_narrow_cone_is_pointwise(self):
        w = 1.95996
        expected = math.erf(w / math.sqrt(2.0))  # 2 Phi(w) - 1
        assert coverage_two_sided(w, 1e-9) == pytest.approx(expected, abs=1e-8)
        assert coverage_two_sided(w, 1e-9) == pytest.approx(0.95, abs=1e-4)

    def test_arrangements_agree(self):
        worst = max(
            abs(coverage_two_sided(w, p) - coverage_two_sided_region(w, p))
            for w in W_GRID for p in PHI_GRID
        )
        assert worst <= 1e-12

    def test_against_brute_force_cone_sampling(self):
        # Draw z ~ N(0, I) and take the sup over 721 directions spanning the cone.
        rng = np.random.default_rng(11)
        z = rng.standard_normal((40_000, 2))
        phi, w = 1.1, 2.1
        ang = np.linspace(-phi / 2, phi / 2, 721)
        u = np.stack([np.cos(ang), np.sin(ang)])
        sup = np.max(np.abs(z @ u), axis=1)
        est = np.mean(sup < w)
        se = math.sqrt(est * (1 - est) / len(z))
        assert abs(est - coverage_two_sided(w, phi)) < 4 * se


class TestOneSided:
    def test_published_points(self, lavelle_fit):
        assert coverage_one_sided_closed(1.899, 0.809) == pytest.approx(0.95, abs=2e-3)
        assert coverage_one_sided_quadrature(1.899, 0.809) == pytest.approx(0.95, abs=2e-3)
        phi = interval_cone_angle(lavelle_fit.info_inv, -1.3, -0.2).phi
        assert coverage_one_sided_closed(1.754, phi) == pytest.approx(0.95, abs=2e-3)

    def test_large_w_tends_to_one(self):
        for phi in (0.1, 1.0, math.pi):
            assert coverage_one_sided_closed(40.0, phi) == pytest.approx(1.0, abs=1e-15)

    def test_quadrature_agrees_with_closed_form(self):
        worst = max(
            abs(coverage_one_sided_closed(w, p) - coverage_one_sided_quadrature(w, p))
            for w in W_GRID for p in PHI_GRID
        )
        assert worst <= 1e-10

    @pytest.mark.parametrize("w", [0.7, 1.9, 3.3])
    def test_half_plane_boundary(self, w):
        expected = 0.5 * (1 - math.exp(-w * w / 2)) + 0.5 * math.erf(w / math.sqrt(2))
        assert coverage_one_sided_closed(w, math.pi) == pytest.approx(expected, abs=1e-15)
        assert coverage_one_sided_quadrature(w, math.pi) == pytest.approx(expected, abs=1e-12)

    def test_narrow_cone_is_normal_cdf(self):
        w = 1.6448536269514722
        assert coverage_one_sided_closed(w, 1e-12) == pytest.approx(0.95, abs=1e-12)

    def test_against_brute_force_cone_sampling(self):
        rng = np.random.default_rng(12)
        z = rng.standard_normal((40_000, 2))
        phi, w = 1.4, 1.8
        ang = np.linspace(-phi / 2, phi / 2, 721)
        sup = np.max(z @ np.stack([np.cos(ang), np.sin(ang)]), axis=1)
        est = np.mean(sup < w)
        se = math.sqrt(est * (1 - est) / len(z))
        assert abs(est - coverage_one_sided_closed(w, phi)) < 4 * se


EVALUATORS = [coverage_two_sided, coverage_two_sided_region, coverage_one_sided_closed,
              coverage_one_sided_quadrature]


@pytest.mark.parametrize("fn", EVALUATORS)
def test_increasing_in_w(fn):
    for phi in (0.05, 0.8, 2.0, math.pi):
        vals = np.array([fn(w, phi) for w in np.linspace(0.2, 4.5, 60)])
        assert np.all(np.diff(vals) > 0)
        assert np.all((vals >= 0) & (vals <= 1))


def test_two_sided_nonincreasing_in_phi():
    for w in (1.0, 2.0, 3.0):
        vals = np.array([coverage_two_sided(w, p) for p in np.linspace(0.01, math.pi, 60)])
        assert np.all(np.diff(vals) <= 1e-15)


def test_quadrature_error_bound_reported():
    for w in W_GRID:
        for p in PHI_GRID:
            assert coverage(w, p, "two_sided")[1] <= 1e-12
            assert coverage(w, p, "one_sided", "supremum")[1] <= 1e-12


class TestSolve:
    @pytest.mark.parametrize("interval,side,expected", [
        ((-1.3, 2.0), "two_sided", 2.344),
        ((-1.3, 0.8), "two_sided", 2.206),
        ((-1.3, -0.2), "two_sided", 2.067),
        ((-1.3, 2.0), "one_sided", 2.049),
        ((-1.3, 0.8), "one_sided", 1.899),
        ((-1.3, -0.2), "one_sided", 1.754),
    ])
    def test_published_values(self, lavelle_fit, interval, side, expected):
        phi = interval_cone_angle(lavelle_fit.info_inv, *interval).phi
        cv = solve_critical(phi, 0.95, side)
        assert cv.w == pytest.approx(expected, abs=0.01)
        assert abs(cv.achieved_coverage - 0.95) <= 1e-10

    def test_unrestricted(self):
        cv = solve_critical(math.pi, 0.95)
        assert cv.w == pytest.approx(math.sqrt(-2 * math.log(0.05)), abs=1e-10)
        # Published 2.447 is the truncation of 2.44775.
        assert cv.w == pytest.approx(2.447, abs=1e-3)

    def test_tiny_cone_gives_normal_quantile(self):
        assert solve_critical(1e-6, 0.95).w == pytest.approx(1.95996, abs=1e-3)

    @pytest.mark.parametrize("method", ["supremum", "region"])
    @pytest.mark.parametrize("side", ["two_sided", "one_sided"])
    def test_methods_give_same_root(self, side, method):
        ref = solve_critical(0.9, 0.95, side)
        assert solve_critical(0.9, 0.95, side, method).w == pytest.approx(ref.w, abs=1e-9)

    @pytest.mark.parametrize("level", [0.8, 0.9, 0.95, 0.99, 0.999])
    def test_bounds_and_ordering(self, level):
        for phi in (0.01, 0.5, 1.5, 2.5, math.pi):
            two = solve_critical(phi, level, "two_sided")
            one = solve_critical(phi, level, "one_sided")
            assert one.w < two.w
            assert pointwise_quantile(level, "two_sided") <= two.w <= scheffe_value(level) + 1e-12
            assert pointwise_quantile(level, "one_sided") <= one.w
            assert abs(two.achieved_coverage - level) <= 1e-10
            assert abs(one.achieved_coverage - level) <= 1e-10

    def test_nested_intervals(self, lavelle_fit):
        ws = [solve_critical(interval_cone_angle(lavelle_fit.info_inv, -1.3, b).phi).w
              for b in (-0.2, 0.8, 2.0)]
        ws.append(solve_critical(math.pi).w)
        assert ws == sorted(ws)

    @pytest.mark.parametrize("level", [0.5, 0.9999, 1.2])
    def test_level_validation(self, level):
        with pytest.raises(ValueError):
            solve_critical(1.0, level)

    def test_phi_validation(self):
        with pytest.raises(ValueError):
            solve_critical(0.0, 0.95)

    def test_phi_above_pi_clamped(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            cv = solve_critical(3.5, 0.95)
        assert cv.phi == math.pi
        assert any("clamped" in str(c.message) for c in caught)

    def test_regression_coverage_by_simulation(self, lavelle_fit):
        # beta_hat - beta ~ N(0, V): the band over (-1.3, 0.8) with the solved w
        # should cover the whole line segment with probability 0.95.
        v = np.asarray(lavelle_fit.info_inv)
        cv = solve_critical(interval_cone_angle(v, -1.3, 0.8).phi, 0.95)
        rng = np.random.default_rng(5)
        d = rng.multivariate_normal([0.0, 0.0], v, size=20_000)
        x = np.linspace(-1.3, 0.8, 1001)
        se = np.sqrt(v[0, 0] + 2 * v[0, 1] * x + v[1, 1] * x * x)
        t = np.abs(d[:, :1] + d[:, 1:] * x) / se
        est = np.mean(t.max(axis=1) < cv.w)
        assert abs(est - 0.95) < 4 * math.sqrt(0.95 * 0.05 / 20_000)
