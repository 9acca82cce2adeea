"""Statistical analysis: correlation, unit-root and causality tests, and a
Monte-Carlo check of the variance-stabilizing square-root transform of
kernel density estimates.

ADF p-values use the MacKinnon (1994) response-surface approximation for
the constant-only regression. Granger statistics follow the nested-OLS
conventions: an F test on the sum-of-squares reduction, the matching
chi-square form, and a Gaussian likelihood-ratio form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np
from scipy import stats as sps

from . import kernels
from .errors import DataError, NumericalError, require

# MacKinnon (1994) response-surface coefficients, single series with
# constant, no trend. Small-p polynomial applies at or below tau_star.
_TAU_STAR_C = -1.61
_TAU_MIN_C = -18.83
_TAU_MAX_C = 2.74
_TAU_C_SMALLP = (2.1659, 1.4412, 3.8269e-2)
_TAU_C_LARGEP = (1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2)

# Squared L2 norm of the standard Gaussian kernel.
GAUSS_KERNEL_L2 = 1.0 / (2.0 * math.sqrt(math.pi))


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation in [-1, 1]."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise DataError("series must be 1-d and of equal length")
    if x.size < 3:
        raise DataError("need at least 3 observations")
    xc = x - x.mean()
    yc = y - y.mean()
    denom = math.sqrt(float(xc @ xc) * float(yc @ yc))
    if denom == 0.0:
        raise DataError("zero variance in at least one series")
    return float(xc @ yc) / denom


@dataclass
class OlsFit:
    params: np.ndarray
    stderr: np.ndarray
    resid: np.ndarray
    ssr: float
    nobs: int
    df_resid: int


def ols(y: np.ndarray, design: np.ndarray) -> OlsFit:
    """Least squares via LAPACK lstsq; rank deficiency is an error."""
    params, _, rank, _ = np.linalg.lstsq(design, y, rcond=None)
    if rank < design.shape[1]:
        raise NumericalError("design matrix is rank-deficient (perfect multicollinearity)")
    resid = y - design @ params
    ssr = float(resid @ resid)
    nobs, k = design.shape
    df_resid = nobs - k
    if df_resid <= 0:
        raise DataError("not enough observations for the number of regressors")
    sigma2 = ssr / df_resid
    xtx_inv = np.linalg.inv(design.T @ design)
    stderr = np.sqrt(np.diag(xtx_inv) * sigma2)
    return OlsFit(
        params=params, stderr=stderr, resid=resid, ssr=ssr, nobs=nobs, df_resid=df_resid
    )


def mackinnon_pvalue(stat: float) -> float:
    """Approximate ADF p-value, constant-only case."""
    if stat > _TAU_MAX_C:
        return 1.0
    if stat < _TAU_MIN_C:
        return 0.0
    coeffs = _TAU_C_SMALLP if stat <= _TAU_STAR_C else _TAU_C_LARGEP
    arg = sum(c * stat**i for i, c in enumerate(coeffs))
    return float(sps.norm.cdf(arg))


class LagSelection(str, Enum):
    FIXED = "fixed"
    AIC = "aic"


@dataclass(frozen=True)
class AdfResult:
    test_stat: float
    p_value: float
    lags_used: int
    regression: str = "constant"


def _adf_design(y: np.ndarray, lag: int) -> tuple[np.ndarray, np.ndarray]:
    """Response dy_t and regressors [const, y_{t-1}, dy_{t-1..t-lag}]."""
    dy = np.diff(y)
    t0 = lag  # first usable index into dy
    response = dy[t0:]
    n = response.size
    cols = [np.ones(n), y[t0 : t0 + n]]
    for j in range(1, lag + 1):
        cols.append(dy[t0 - j : t0 - j + n])
    return response, np.column_stack(cols)


def adf_test(
    series: Sequence[float],
    max_lag: int = 0,
    lag_selection: LagSelection | str = LagSelection.FIXED,
) -> AdfResult:
    """Augmented Dickey-Fuller unit-root test with a constant term.

    The statistic is the t-ratio of the lagged-level coefficient in the
    regression of dy_t on a constant, y_{t-1}, and lagged differences.
    """
    lag_selection = LagSelection(lag_selection)
    y = np.asarray(series, dtype=np.float64)
    require(max_lag >= 0, "max_lag must be non-negative")
    if y.ndim != 1 or y.size <= 2 * (max_lag + 2):
        raise DataError(
            f"series too short for max_lag={max_lag}: need more than {2 * (max_lag + 2)}"
        )
    if np.min(y) == np.max(y):
        raise DataError("series is constant")

    if lag_selection is LagSelection.FIXED:
        lag = max_lag
    else:
        # Compare AICs on the sample aligned at max_lag for comparability.
        dy = np.diff(y)
        n_common = dy.size - max_lag
        best_lag, best_aic = 0, np.inf
        for cand in range(max_lag + 1):
            response_full, design_full = _adf_design(y, cand)
            response = response_full[-n_common:]
            design = design_full[-n_common:]
            fit = ols(response, design)
            aic = n_common * math.log(fit.ssr / n_common) + 2 * design.shape[1]
            if aic < best_aic:
                best_lag, best_aic = cand, aic
        lag = best_lag

    response, design = _adf_design(y, lag)
    fit = ols(response, design)
    stat = float(fit.params[1] / fit.stderr[1])
    return AdfResult(test_stat=stat, p_value=mackinnon_pvalue(stat), lags_used=lag)


@dataclass(frozen=True)
class GrangerResult:
    lag: int
    f_stat: float
    f_pvalue: float
    chi2_stat: float
    chi2_pvalue: float
    lr_stat: float
    lr_pvalue: float
    df_num: int
    df_denom: int
    n_obs: int

    def to_dict(self) -> dict:
        return {
            "lag": self.lag,
            "f_stat": self.f_stat,
            "f_pvalue": self.f_pvalue,
            "chi2_stat": self.chi2_stat,
            "chi2_pvalue": self.chi2_pvalue,
            "lr_stat": self.lr_stat,
            "lr_pvalue": self.lr_pvalue,
            "df_num": self.df_num,
            "df_denom": self.df_denom,
            "n_obs": self.n_obs,
            # the parameter F test coincides with the ssr-based F test here
            "params_f_stat": self.f_stat,
            "params_f_pvalue": self.f_pvalue,
        }


def _lag_matrix(series: np.ndarray, lag: int) -> np.ndarray:
    """Columns series_{t-1..t-lag} for rows t = lag .. T-1."""
    n = series.size - lag
    return np.column_stack([series[lag - j : lag - j + n] for j in range(1, lag + 1)])


def granger_test(x: Sequence[float], y: Sequence[float], lag: int) -> GrangerResult:
    """Does the past of x improve the prediction of y beyond y's own past?

    Null hypothesis: it does not. Regressions condition on the first
    ``lag`` values, so n_obs = len(y) - lag and the unrestricted model
    spends 2*lag + 1 parameters.
    """
    require(lag >= 1, "lag must be positive")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise DataError("series must be 1-d, aligned, and of equal length")
    t = y.size
    if t <= 2 * lag + 2:
        raise DataError(f"need more than {2 * lag + 2} observations for lag {lag}")

    n_obs = t - lag
    response = y[lag:]
    own = _lag_matrix(y, lag)
    other = _lag_matrix(x, lag)
    const = np.ones(n_obs)
    restricted = ols(response, np.column_stack([const, own]))
    unrestricted = ols(response, np.column_stack([const, own, other]))

    df_num = lag
    df_denom = n_obs - 2 * lag - 1
    assert unrestricted.ssr <= restricted.ssr + 1e-9, "nested OLS must not raise SSR"
    if unrestricted.ssr <= 0.0:
        raise NumericalError("unrestricted regression has zero residual variance")

    f_stat = ((restricted.ssr - unrestricted.ssr) / df_num) / (unrestricted.ssr / df_denom)
    chi2_stat = n_obs * (restricted.ssr - unrestricted.ssr) / unrestricted.ssr
    lr_stat = n_obs * math.log(restricted.ssr / unrestricted.ssr)
    return GrangerResult(
        lag=lag,
        f_stat=float(f_stat),
        f_pvalue=float(sps.f.sf(f_stat, df_num, df_denom)),
        chi2_stat=float(chi2_stat),
        chi2_pvalue=float(sps.chi2.sf(chi2_stat, df_num)),
        lr_stat=float(lr_stat),
        lr_pvalue=float(sps.chi2.sf(lr_stat, df_num)),
        df_num=df_num,
        df_denom=df_denom,
        n_obs=n_obs,
    )


def granger_sweep(
    x: Sequence[float], y: Sequence[float], max_lag: int = 7
) -> list[GrangerResult]:
    require(max_lag >= 1, "max_lag must be positive")
    return [granger_test(x, y, lag) for lag in range(1, max_lag + 1)]


class Density(str, Enum):
    UNIFORM = "uniform"
    GAUSSIAN_MIXTURE = "gaussian-mixture"


_MIX_WEIGHTS = (0.75, 0.25)
_MIX_MEANS = (0.0, 3.0)
_MIX_SIGMA = 0.5


def true_density(density: Density | str, x: float) -> float:
    density = Density(density)
    if density is Density.UNIFORM:
        return 1.0 if 0.0 <= x <= 1.0 else 0.0
    acc = 0.0
    for wgt, mu in zip(_MIX_WEIGHTS, _MIX_MEANS):
        z = (x - mu) / _MIX_SIGMA
        acc += wgt * math.exp(-0.5 * z * z) / (_MIX_SIGMA * math.sqrt(2 * math.pi))
    return acc


def _sample(density: Density, n: int, rng: np.random.Generator) -> np.ndarray:
    if density is Density.UNIFORM:
        return rng.random(n)
    comp = rng.random(n) < _MIX_WEIGHTS[0]
    z = rng.standard_normal(n)
    return np.where(comp, _MIX_MEANS[0] + _MIX_SIGMA * z, _MIX_MEANS[1] + _MIX_SIGMA * z)


@dataclass(frozen=True)
class VariancePoint:
    x: float
    true_density: float
    var_raw_nh: float
    var_sqrt_nh: float


def hellinger_variance_check(
    density: Density | str,
    n: int,
    h: float,
    eval_points: Sequence[float],
    reps: int,
    seed: int = 42,
) -> list[VariancePoint]:
    """Monte-Carlo variances of a Gaussian KDE and of its square root.

    Scaled by n*h, the raw-density variance tracks f(x) * ||K||_2^2 while
    the square-root variance tracks the density-free constant
    ||K||_2^2 / 4. Rep seeds derive from (seed, rep); results merge by
    rep index, so the output is deterministic.
    """
    density = Density(density)
    require(n >= 100, "n too small for a kernel density estimate")
    require(reps >= 2, "need at least 2 repetitions to estimate a variance")
    require(h > 0, "bandwidth must be positive")
    points = np.asarray(eval_points, dtype=np.float64)
    truth = np.array([true_density(density, float(p)) for p in points])
    low = [float(p) for p, f in zip(points, truth) if f < 0.05]
    if low:
        raise DataError(
            f"true density below 0.05 at eval points {low}; asymptotics unreliable"
        )

    estimates = np.empty((reps, points.size))
    out = np.empty(points.size)
    for rep in range(reps):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, rep])))
        samples = _sample(density, n, rng)
        kernels.kde_gauss_at(samples, points, h, out)
        estimates[rep] = out

    var_raw = estimates.var(axis=0, ddof=1) * n * h
    var_sqrt = np.sqrt(estimates).var(axis=0, ddof=1) * n * h
    return [
        VariancePoint(
            x=float(points[j]),
            true_density=float(truth[j]),
            var_raw_nh=float(var_raw[j]),
            var_sqrt_nh=float(var_sqrt[j]),
        )
        for j in range(points.size)
    ]
