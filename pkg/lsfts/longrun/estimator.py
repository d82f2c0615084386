import logging
import math
import warnings
from typing import Optional

import numpy as np

from lsfts.core import FunctionalSeries, LocalCovariance
from lsfts.exceptions import ClippedEigenvalueWarning, InvalidBandwidthError, LagRangeError
from lsfts.kernels import (
    BARTLETT, EPANECHNIKOV, LagWindowKernel, SmoothingKernel,
    default_bandwidth_b, flag_boundary, k2_eval, local_weights,
)
from lsfts.local_covariance import weighted_second_moment

logger = logging.getLogger(__name__)


def _lag_product(centered: np.ndarray, weights: np.ndarray, lag: int) -> np.ndarray:
    # sum_{j=lag+1}^{T} w_j Y_j(s1) Y_{j-lag}(s2), rows of Y 0-based
    lead = centered[lag:] * weights[lag:, None]
    return lead.T @ centered[:centered.shape[0] - lag]


def _centered(X: FunctionalSeries, weights: np.ndarray) -> np.ndarray:
    return X.values - weights @ X.values


def local_autocov(X: FunctionalSeries, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                  lag: int = 1) -> LocalCovariance:
    """
    Local lag-`lag` autocovariance surface gamma_lag(u)(s1, s2)

    Curves are centered by the full-sample local mean at u. The surface is not symmetric
    in (s1, s2).
    """
    if not 1 <= lag <= X.T - 1:
        raise LagRangeError(f"lag must lie in [1, {X.T - 1}], got {lag}")
    weights = local_weights(u, X.T, h, kernel)
    boundary = flag_boundary(u, h, kernel)
    surface = _lag_product(_centered(X, weights), weights, lag)
    return LocalCovariance(surface, X.grid, u, h, symmetric=False, boundary=boundary)


def max_lag(b: float, k2: LagWindowKernel, T: int) -> int:
    """Largest lag with K2(t/b) possibly nonzero, capped at T - 1."""
    return min(int(math.floor(k2.support_radius * b)), T - 1)


def longrun_cov(X: FunctionalSeries, u: float, h: float, b: Optional[float] = None,
                k1: SmoothingKernel = EPANECHNIKOV, k2: LagWindowKernel = BARTLETT) -> LocalCovariance:
    """
    Lag-window estimator of the local long-run covariance kernel

    c(u) = gamma_0 + sum_{t>=1} K2(t/b) {gamma_t(s1, s2) + gamma_t(s2, s1)}, the lag sum
    truncated at floor(C2 * b) since K2 vanishes beyond its support.

    Args:
        X: Observed series
        u: Rescaled time
        h: Smoothing bandwidth
        b: Lag-window bandwidth; (T h)^{1/3} when omitted
        k1: Smoothing kernel
        k2: Lag window

    Returns:
        LocalCovariance: Symmetric long-run kernel
    """
    if b is None:
        b = default_bandwidth_b(X.T, h)
    if not (b > 0 and np.isfinite(b)):
        raise InvalidBandwidthError(f"lag-window bandwidth must be positive, got b={b}")
    weights = local_weights(u, X.T, h, k1)
    boundary = flag_boundary(u, h, k1)
    centered = _centered(X, weights)
    total = weighted_second_moment(X.values, weights, center=True)
    last = max_lag(b, k2, X.T)
    for lag in range(1, last + 1):
        window = k2_eval(k2, lag / b)
        if window == 0:
            continue
        surface = _lag_product(centered, weights, lag)
        total = total + window * (surface + surface.T)
    total = (total + total.T) / 2
    logger.debug(f"longrun_cov: u={u} h={h} b={b:.4g} lags summed={last}")
    return LocalCovariance(total, X.grid, u, h, boundary=boundary)


def longrun_direction_value(longrun: LocalCovariance, direction) -> float:
    """Quadrature value of <C_lr d, d>."""
    weighted = longrun.grid.weights * np.asarray(direction, dtype=float)
    return float(weighted @ longrun.kernel @ weighted)


def clip_spectrum(eigenvalues: np.ndarray) -> np.ndarray:
    """Zero out negative eigenvalues of a finite-sample long-run estimate, with a warning."""
    if eigenvalues.min() < 0:
        warnings.warn(f"clipping negative long-run eigenvalues (min {eigenvalues.min():.3e}) at zero",
                      ClippedEigenvalueWarning, stacklevel=2)
        return np.clip(eigenvalues, 0.0, None)
    return eigenvalues
