import logging
from typing import Optional, Union

import numpy as np
from scipy import stats

from lsfts.core import FunctionalSeries, LocalCovariance, operator_eigh
from lsfts.exceptions import GridMismatchError, InvalidOrderError, RankDeficiencyError
from lsfts.kernels import BARTLETT, EPANECHNIKOV, LagWindowKernel, SmoothingKernel, k1_squared_integral
from lsfts.local_mean import local_mean
from lsfts.longrun import clip_spectrum, longrun_cov
from lsfts.two_sample.config import TwoSampleConfig
from lsfts.two_sample.pvalues import pvalue_weighted_chisq
from lsfts.two_sample.result import PValueMethod, TwoSampleResult
from lsfts.two_sample.selection import select_q_ratio

logger = logging.getLogger(__name__)


def _check_pair(X: FunctionalSeries, Y: FunctionalSeries):
    if not X.grid.same_as(Y.grid):
        raise GridMismatchError("the two samples live on different grids")


def _scale(X: FunctionalSeries, Y: FunctionalSeries, h: float) -> float:
    return X.T * Y.T * h / (X.T + Y.T)


def theta_hat(X: FunctionalSeries, Y: FunctionalSeries) -> float:
    return X.T / (X.T + Y.T)


def mean_difference(X: FunctionalSeries, Y: FunctionalSeries, u: float, h: float,
                    kernel: SmoothingKernel = EPANECHNIKOV) -> np.ndarray:
    """Xbar(u) - Ybar(u), each sample rescaled by its own length."""
    _check_pair(X, Y)
    return local_mean(X, u, h, kernel) - local_mean(Y, u, h, kernel)


def u_statistic(X: FunctionalSeries, Y: FunctionalSeries, u: float, h: float,
                kernel: SmoothingKernel = EPANECHNIKOV) -> float:
    """T1 T2 h / (T1 + T2) times the squared L2 distance of the two local means."""
    diff = mean_difference(X, Y, u, h, kernel)
    return float(_scale(X, Y, h) * (X.grid.weights @ diff ** 2))


def pooled_longrun(X: FunctionalSeries, Y: FunctionalSeries, u: float, h: float, b: Optional[float] = None,
                   k1: SmoothingKernel = EPANECHNIKOV, k2: LagWindowKernel = BARTLETT) -> LocalCovariance:
    """
    Pooled long-run kernel (1 - theta) c1(u) + theta c2(u) with theta = T1 / (T1 + T2)

    When b is omitted each sample uses its own default lag-window bandwidth.
    """
    _check_pair(X, Y)
    theta = theta_hat(X, Y)
    c1 = longrun_cov(X, u, h, b, k1, k2)
    c2 = longrun_cov(Y, u, h, b, k1, k2)
    pooled = (1.0 - theta) * c1.kernel + theta * c2.kernel
    return LocalCovariance(pooled, X.grid, u, h, boundary=c1.boundary or c2.boundary)


def projected_tests(X: FunctionalSeries, Y: FunctionalSeries, u: float, h: float, b: Optional[float] = None,
                    q: Union[int, str] = 'auto', k1: SmoothingKernel = EPANECHNIKOV, k2: LagWindowKernel = BARTLETT,
                    eps0: Optional[float] = None, n_mc: Optional[int] = None, seed: Optional[int] = None,
                    weighted_pvalues: bool = True) -> TwoSampleResult:
    """
    Test equality of the two local mean functions at u

    The spectrum (eta_j, nu_j) comes from the pooled long-run kernel with the eigenvalues
    multiplied by int K1^2, which is the covariance of the limiting Gaussian element.

    Args:
        X: First sample
        Y: Second sample, independent of X
        u: Rescaled time
        h: Smoothing bandwidth
        b: Lag-window bandwidth; per-sample default when omitted
        q: Number of components or 'auto' for the eigenvalue-ratio choice
        k1: Smoothing kernel
        k2: Lag window
        eps0: Relative eigenvalue threshold
        n_mc: Monte Carlo draws for weighted chi-square p-values
        seed: Seed for the Monte Carlo p-values
        weighted_pvalues: Also compute Monte Carlo p-values for Ubar and U

    Returns:
        TwoSampleResult: Statistics, chosen order and p-values
    """
    config = TwoSampleConfig()
    eps0 = config.eps0 if eps0 is None else eps0
    n = X.grid.n

    diff = mean_difference(X, Y, u, h, k1)
    scale = _scale(X, Y, h)
    pooled = pooled_longrun(X, Y, u, h, b, k1, k2)
    eigen = operator_eigh(pooled, n)
    eta = clip_spectrum(eigen.eigenvalues) * k1_squared_integral(k1)

    if q is None or q == 'auto':
        q_used = select_q_ratio(eta, min(config.q_bar, n - 1), eps0)
    else:
        q_used = int(q)
        if not 1 <= q_used <= n:
            raise InvalidOrderError(f"q must lie in [1, {n}], got {q_used}")
    if not eta[0] > 0 or eta[q_used - 1] < eps0 * eta[0]:
        raise RankDeficiencyError(f"eta_{q_used} is below eps0 * eta_1; the studentized statistic is undefined")

    scores = eigen.eigenfunctions[:q_used] @ (X.grid.weights * diff)
    squares = scores ** 2
    statistic_ubar = float(scale * squares.sum())
    statistic_utilde = float(scale * np.sum(squares / eta[:q_used]))
    statistic_u = float(scale * (X.grid.weights @ diff ** 2))
    p_value = float(stats.chi2.sf(statistic_utilde, q_used))

    p_value_ubar = p_value_u = None
    if weighted_pvalues:
        p_value_ubar = pvalue_weighted_chisq(eta[:q_used], statistic_ubar, n_mc, seed)
        p_value_u = pvalue_weighted_chisq(eta[eta > 0] if np.any(eta > 0) else eta[:1], statistic_u, n_mc, seed)

    logger.info(f"two-sample at u={u}: q={q_used} U={statistic_u:.4g} Ubar={statistic_ubar:.4g} "
                f"Utilde={statistic_utilde:.4g} p={p_value:.4g}")
    return TwoSampleResult(
        statistic_U=statistic_u,
        statistic_Ubar=statistic_ubar,
        statistic_Utilde=statistic_utilde,
        q_used=q_used,
        p_value=p_value,
        theta_hat=theta_hat(X, Y),
        method=PValueMethod.CHISQ,
        p_value_ubar=p_value_ubar,
        p_value_u=p_value_u,
        eta=[float(value) for value in eta[:max(q_used, min(n, 10))]],
    )
