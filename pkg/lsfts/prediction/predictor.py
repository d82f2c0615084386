import logging
from typing import Optional, Sequence, Union

import numpy as np

from lsfts.core import EigenSystem, FunctionalSeries, LocalCovariance, kl_project
from lsfts.exceptions import EmptyWindowError, HorizonError, InvalidOrderError, InvalidTimeError
from lsfts.kernels import EPANECHNIKOV, SmoothingKernel, default_bandwidth_h, flag_boundary, kernel_values
from lsfts.local_covariance import local_fpca, weighted_second_moment
from lsfts.two_sample.selection import select_q_ratio
from lsfts.prediction.config import PredictionConfig

logger = logging.getLogger(__name__)


def prediction_weights(T1: int, T: int, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                       normalized: bool = False) -> np.ndarray:
    """2 K1((u - t/T)/h) / (T h) for t = 1..T1, or the kernel values rescaled to sum to one."""
    if T1 >= T:
        raise HorizonError(f"observed length T1={T1} must be smaller than T={T}")
    values = kernel_values(u, T, h, kernel)[:T1]
    total = values.sum()
    if not total > 0:
        raise EmptyWindowError(f"no observation among the first {T1} receives weight at u={u} with h={h}")
    if normalized:
        return values / total
    return 2.0 * values / (T * h)


def prediction_cov(X: FunctionalSeries, T: int, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                   center: bool = False, normalized: bool = False) -> LocalCovariance:
    """
    Covariance estimate for prediction from the observed curves X_1..X_{T1}

    Args:
        X: The T1 observed curves
        T: Horizon length used for rescaling, T > T1
        u: Rescaled time in (0, 1)
        h: Bandwidth
        kernel: Smoothing kernel K1
        center: Subtract the weighted mean built with the same weights first
        normalized: Use weights summing to one instead of 2/(T h)

    Returns:
        LocalCovariance: The estimate tagged with u and h
    """
    if not 0.0 < u < 1.0:
        raise InvalidTimeError(f"prediction needs u in (0, 1), got {u}")
    weights = prediction_weights(X.T, T, u, h, kernel, normalized)
    boundary = flag_boundary(u, h, kernel)
    return LocalCovariance(weighted_second_moment(X.values, weights, center), X.grid, u, h, boundary=boundary)


def _resolve_horizon(X: FunctionalSeries, k: int, T: Optional[int], u: Optional[float]):
    if k < 1:
        raise HorizonError(f"prediction step must be at least 1, got k={k}")
    if T is None:
        T = X.T + k + 1
    if not X.T + k < T:
        raise HorizonError(f"need T1 + k < T, got T1={X.T}, k={k}, T={T}")
    if u is None:
        u = X.T / T
    return T, u


def predict_k_step(X: FunctionalSeries, k: int = 1, q: Union[int, str, None] = None, T: Optional[int] = None,
                   u: Optional[float] = None, h: Optional[float] = None, kernel: SmoothingKernel = EPANECHNIKOV,
                   center: bool = False, normalized: bool = False,
                   eigensystem: Optional[EigenSystem] = None) -> np.ndarray:
    """
    k-step-ahead prediction by projection on local eigenfunctions

    Projects the last observed curve on the top-q eigenfunctions of the prediction
    covariance at u. The v (x) v form makes the result independent of eigenfunction signs.

    Args:
        X: The T1 observed curves
        k: Steps ahead, T1 + k < T
        q: Number of components, or 'auto'/None for the eigenvalue-ratio choice
        T: Rescaling horizon; T1 + k + 1 when omitted
        u: Rescaled time; T1 / T when omitted
        h: Bandwidth; T^{-1/3} times the configured constant when omitted
        kernel: Smoothing kernel K1
        center: Estimate a local mean, project X_{T1} minus it, and add it back
        normalized: Weight mode for the covariance and mean
        eigensystem: Use these eigenfunctions instead of estimating them

    Returns:
        np.ndarray: The predicted curve
    """
    config = PredictionConfig()
    T, u = _resolve_horizon(X, k, T, u)
    offset = np.zeros(X.grid.n)
    if eigensystem is None:
        if h is None:
            h = default_bandwidth_h(T, constant=config.settings.h_constant)
        cov = prediction_cov(X, T, u, h, kernel, center, normalized)
        if center:
            offset = prediction_weights(X.T, T, u, h, kernel, normalized) @ X.values
        q = _resolve_order(cov, q, config)
        eigensystem = local_fpca(cov, q)
    elif q is not None and q != 'auto':
        eigensystem = eigensystem.truncate(int(q))
    last = X.values[-1]
    logger.debug(f"predict_k_step: T1={X.T} k={k} T={T} u={u:.4f} q={eigensystem.count}")
    return offset + kl_project(last - offset, eigensystem)


def _resolve_order(cov: LocalCovariance, q, config: PredictionConfig) -> int:
    n = cov.grid.n
    if q is None or q == 'auto':
        q_bar = min(config.q_bar, n - 1)
        spectrum = local_fpca(cov, q_bar + 1).eigenvalues
        chosen = select_q_ratio(spectrum, q_bar, config.eps0)
        logger.info(f"prediction order chosen by eigenvalue ratio: q={chosen}")
        return chosen
    q = int(q)
    if not 1 <= q <= n:
        raise InvalidOrderError(f"q must lie in [1, {n}], got {q}")
    return q


def predict_horizons(X: FunctionalSeries, ks: Sequence[int], **kwargs) -> np.ndarray:
    """Predictions for several step sizes; row i answers ks[i]."""
    return np.vstack([predict_k_step(X, k=int(k), **kwargs) for k in ks])
