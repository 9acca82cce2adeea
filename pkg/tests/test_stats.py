import math

import numpy as np
import pytest

from crrix.errors import DataError, NumericalError, UsageError
from crrix.stats import (
    GAUSS_KERNEL_L2,
    Density,
    LagSelection,
    adf_test,
    granger_sweep,
    granger_test,
    hellinger_variance_check,
    mackinnon_pvalue,
    ols,
    pearson,
    true_density,
)


def causal_pair(n=900, seed=21, coeff=0.8):
    """x white noise; y follows x with one lag. The constructed direction
    is the ground truth the causality tests must recover."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n)
    y = np.zeros(n)
    eps = rng.standard_normal(n) * 0.5
    for t in range(1, n):
        y[t] = 0.3 * y[t - 1] + coeff * x[t - 1] + eps[t]
    return x, y


class TestPearson:
    def test_affine_relation_is_one(self):
        x = np.arange(10.0)
        assert pearson(x, 2 * x + 1) == pytest.approx(1.0, abs=1e-12)

    def test_negation_is_minus_one(self):
        x = np.arange(10.0)
        assert pearson(x, -x) == pytest.approx(-1.0, abs=1e-12)

    def test_constructed_exact_half(self):
        # build y from the orthonormalized pieces so that r = 0.5 exactly
        rng = np.random.default_rng(3)
        x = rng.standard_normal(200)
        e = rng.standard_normal(200)
        xc = x - x.mean()
        u = xc / np.linalg.norm(xc)
        ec = e - e.mean()
        ec -= (ec @ u) * u
        v = ec / np.linalg.norm(ec)
        y = 0.5 * u + math.sqrt(0.75) * v
        assert pearson(x, y) == pytest.approx(0.5, abs=1e-12)

    def test_zero_variance_rejected(self):
        with pytest.raises(DataError, match="zero variance"):
            pearson([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])

    def test_length_and_size_guards(self):
        with pytest.raises(DataError):
            pearson([1.0, 2.0], [1.0, 2.0])
        with pytest.raises(DataError):
            pearson([1.0, 2.0, 3.0], [1.0, 2.0])

    def test_invariant_under_positive_affine_transforms(self):
        rng = np.random.default_rng(8)
        x = rng.standard_normal(50)
        y = rng.standard_normal(50)
        base = pearson(x, y)
        assert pearson(3.0 * x + 7.0, y) == pytest.approx(base, abs=1e-12)
        assert pearson(x, 0.2 * y - 11.0) == pytest.approx(base, abs=1e-12)


class TestOls:
    def test_matches_normal_equations_oracle(self):
        # brute-force oracle: solve X'X b = X'y directly
        rng = np.random.default_rng(5)
        for trial in range(5):
            design = np.column_stack([np.ones(40), rng.standard_normal((40, 4))])
            y = rng.standard_normal(40)
            fit = ols(y, design)
            oracle = np.linalg.solve(design.T @ design, design.T @ y)
            np.testing.assert_allclose(fit.params, oracle, atol=1e-9)
            oracle_resid = y - design @ oracle
            assert fit.ssr == pytest.approx(float(oracle_resid @ oracle_resid), abs=1e-9)

    def test_rank_deficiency_rejected(self):
        design = np.column_stack([np.ones(10), np.arange(10.0), 2 * np.arange(10.0)])
        with pytest.raises(NumericalError, match="rank-deficient"):
            ols(np.arange(10.0), design)


class TestAdf:
    def test_white_noise_rejects_unit_root(self):
        rng = np.random.default_rng(101)
        result = adf_test(rng.standard_normal(1000), max_lag=2)
        assert result.p_value < 0.01

    def test_random_walk_fails_to_reject(self):
        rng = np.random.default_rng(202)
        walk = np.cumsum(rng.standard_normal(1000))
        result = adf_test(walk, max_lag=2)
        assert result.p_value > 0.10

    def test_stationary_ar1_rejects_at_5pct(self):
        rng = np.random.default_rng(303)
        y = np.zeros(1000)
        for t in range(1, 1000):
            y[t] = 0.5 * y[t - 1] + rng.standard_normal()
        result = adf_test(y, max_lag=2)
        assert result.p_value < 0.05

    def test_too_short_rejected(self):
        with pytest.raises(DataError, match="too short"):
            adf_test(np.arange(8.0), max_lag=2)

    def test_constant_series_rejected(self):
        with pytest.raises(DataError, match="constant"):
            adf_test(np.ones(50), max_lag=1)

    def test_aic_selection_reports_lag(self):
        rng = np.random.default_rng(404)
        y = np.zeros(500)
        for t in range(2, 500):
            y[t] = 0.4 * y[t - 1] + 0.3 * (y[t - 1] - y[t - 2]) + rng.standard_normal()
        result = adf_test(y, max_lag=6, lag_selection=LagSelection.AIC)
        assert 0 <= result.lags_used <= 6
        assert result.regression == "constant"

    def test_matches_statsmodels(self):
        statsmodels = pytest.importorskip("statsmodels.tsa.stattools")
        rng = np.random.default_rng(66)
        series = np.cumsum(rng.standard_normal(400))
        mine = adf_test(series, max_lag=3)
        stat, p, *_ = statsmodels.adfuller(series, maxlag=3, regression="c", autolag=None)
        assert mine.test_stat == pytest.approx(stat, abs=1e-10)
        assert mine.p_value == pytest.approx(p, abs=1e-10)

    def test_mackinnon_boundaries(self):
        assert mackinnon_pvalue(5.0) == 1.0
        assert mackinnon_pvalue(-25.0) == 0.0
        assert 0.0 < mackinnon_pvalue(-2.86) < 0.06


class TestGranger:
    def test_constructed_causal_direction(self):
        x, y = causal_pair()
        result = granger_test(x, y, lag=1)
        assert result.f_pvalue < 0.001
        reverse = granger_test(y, x, lag=1)
        assert reverse.f_pvalue > 0.05

    def test_df_denom_formula_reproduces_825(self):
        # 829 aligned points -> 828 regression observations at lag 1
        x, y = causal_pair(n=829, seed=11)
        result = granger_test(x, y, lag=1)
        assert result.n_obs == 828
        assert result.df_denom == 828 - 2 * 1 - 1 == 825
        assert result.df_num == 1

    def test_nonnegative_f_and_nested_ssr(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            x = rng.standard_normal(60)
            y = rng.standard_normal(60)
            result = granger_test(x, y, lag=2)
            assert result.f_stat >= 0.0
            assert 0.0 <= result.f_pvalue <= 1.0

    def test_sweep_rejects_all_lags_in_true_direction(self):
        x, y = causal_pair()
        results = granger_sweep(x, y, max_lag=7)
        assert len(results) == 7
        assert all(r.f_pvalue < 0.05 for r in results)

    def test_sweep_on_independent_noise_mostly_accepts(self):
        rng = np.random.default_rng(31)
        x = rng.standard_normal(900)
        y = rng.standard_normal(900)
        results = granger_sweep(x, y, max_lag=7)
        assert sum(1 for r in results if r.f_pvalue < 0.05) <= 2

    def test_sweep_single_lag_equals_single_test(self):
        x, y = causal_pair(n=100, seed=5)
        sweep = granger_sweep(x, y, max_lag=1)
        single = granger_test(x, y, 1)
        assert sweep == [single]

    def test_too_short_rejected(self):
        with pytest.raises(DataError, match="observations"):
            granger_test(np.arange(6.0), np.arange(6.0), lag=2)

    def test_collinear_design_rejected(self):
        x = np.ones(50)
        x[0] = 2.0  # non-constant overall, constant within the lag window
        y = np.arange(50.0)
        with pytest.raises(NumericalError):
            granger_test(x, y, lag=2)

    def test_matches_statsmodels(self):
        sm = pytest.importorskip("statsmodels.tsa.stattools")
        x, y = causal_pair(n=300, seed=7)
        data = np.column_stack([y, x])
        for lag in (1, 3):
            mine = granger_test(x, y, lag)
            theirs = sm.grangercausalitytests(data, [lag], verbose=False)[lag][0]
            f, fp, fdf, _ = theirs["ssr_ftest"]
            assert mine.f_stat == pytest.approx(f, rel=1e-10)
            assert mine.f_pvalue == pytest.approx(fp, rel=1e-8, abs=1e-300)
            assert mine.df_denom == int(fdf)
            assert mine.chi2_stat == pytest.approx(theirs["ssr_chi2test"][0], rel=1e-10)
            assert mine.lr_stat == pytest.approx(theirs["lrtest"][0], rel=1e-10)


class TestVarianceCheck:
    def test_uniform_sqrt_variance_is_density_free(self):
        points = hellinger_variance_check(
            Density.UNIFORM, n=20_000, h=0.02, eval_points=[0.3, 0.7], reps=200, seed=9
        )
        target = GAUSS_KERNEL_L2 / 4.0
        for p in points:
            assert p.var_sqrt_nh == pytest.approx(target, rel=0.2)
            assert p.var_raw_nh == pytest.approx(p.true_density * GAUSS_KERNEL_L2, rel=0.25)

    def test_mixture_raw_variance_tracks_density(self):
        points = hellinger_variance_check(
            Density.GAUSSIAN_MIXTURE,
            n=20_000,
            h=0.02,
            eval_points=[0.0, 3.0],
            reps=200,
            seed=9,
        )
        f_ratio = points[0].true_density / points[1].true_density
        assert f_ratio == pytest.approx(3.0, rel=1e-3)
        raw_ratio = points[0].var_raw_nh / points[1].var_raw_nh
        sqrt_ratio = points[0].var_sqrt_nh / points[1].var_sqrt_nh
        assert raw_ratio == pytest.approx(f_ratio, rel=0.25)
        assert sqrt_ratio == pytest.approx(1.0, rel=0.2)

    def test_low_density_eval_point_rejected(self):
        with pytest.raises(DataError, match="below 0.05"):
            hellinger_variance_check(
                Density.GAUSSIAN_MIXTURE, n=1000, h=0.05, eval_points=[1.5], reps=10
            )

    def test_true_density_values(self):
        assert true_density(Density.UNIFORM, 0.5) == 1.0
        assert true_density(Density.UNIFORM, 1.5) == 0.0
        peak = 0.75 / (0.5 * math.sqrt(2 * math.pi))
        assert true_density(Density.GAUSSIAN_MIXTURE, 0.0) == pytest.approx(peak, rel=1e-6)

    def test_deterministic_by_seed(self):
        a = hellinger_variance_check(Density.UNIFORM, 2000, 0.05, [0.5], reps=20, seed=4)
        b = hellinger_variance_check(Density.UNIFORM, 2000, 0.05, [0.5], reps=20, seed=4)
        assert a == b

    def test_bad_arguments_rejected(self):
        with pytest.raises(UsageError):
            hellinger_variance_check(Density.UNIFORM, 10, 0.05, [0.5], reps=10)
        with pytest.raises(UsageError):
            hellinger_variance_check(Density.UNIFORM, 1000, -0.1, [0.5], reps=10)
