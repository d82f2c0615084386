"""
Analytic ground truth for the tvAR(1) Fourier model and literal reference
implementations of the kernel estimators.

The reference implementations sum in the order the estimators are written down,
one scalar at a time, and are only meant for small inputs.
"""

import numpy as np

from lsfts.core import EigenSystem, FunctionalSeries, Grid, LocalCovariance
from lsfts.exceptions import OracleUndefinedError, SizeCapError
from lsfts.kernels import EPANECHNIKOV, BARTLETT, LagWindowKernel, SmoothingKernel, k1_eval, k2_eval
from lsfts.simulate.basis import fourier_basis
from lsfts.simulate.model import SimConfig

MAX_BRUTE_T = 50
MAX_BRUTE_N = 16

# population operators involve no smoothing
POPULATION_H = 0.0


def _spectrum(cfg: SimConfig, u: float, longrun: bool) -> np.ndarray:
    if cfg.has_mean:
        raise OracleUndefinedError("covariance oracles need a mean-zero configuration")
    cfg.validate()
    a = np.array([c.a(u) for c in cfg.components], dtype=float)
    sigma2 = np.array([c.sigma(u) for c in cfg.components], dtype=float) ** 2
    if longrun:
        return sigma2 / (1.0 - a) ** 2
    return sigma2 / (1.0 - a ** 2)


def _kernel(cfg: SimConfig, values: np.ndarray, grid: Grid) -> np.ndarray:
    basis = fourier_basis(cfg.K, grid)
    return (basis.T * values[None, :]) @ basis


def true_local_covariance(cfg: SimConfig, u: float, grid: Grid) -> LocalCovariance:
    """C_u = sum_k sigma_k^2(u) / (1 - a_k^2(u)) phi_k (x) phi_k."""
    return LocalCovariance(_kernel(cfg, _spectrum(cfg, u, longrun=False), grid), grid, u, POPULATION_H)


def true_eigensystem(cfg: SimConfig, u: float, grid: Grid) -> EigenSystem:
    """Eigenvalues of C_u in descending order with the matching basis functions."""
    values = _spectrum(cfg, u, longrun=False)
    order = np.argsort(-values, kind='stable')
    return EigenSystem(values[order], fourier_basis(cfg.K, grid)[order], grid)


def true_longrun_eigensystem(cfg: SimConfig, u: float, grid: Grid) -> EigenSystem:
    values = _spectrum(cfg, u, longrun=True)
    order = np.argsort(-values, kind='stable')
    return EigenSystem(values[order], fourier_basis(cfg.K, grid)[order], grid)


def true_longrun_cov(cfg: SimConfig, u: float, grid: Grid) -> LocalCovariance:
    """c(u) = sum_k sigma_k^2(u) / (1 - a_k(u))^2 phi_k (x) phi_k, the AR(1) long-run variances."""
    return LocalCovariance(_kernel(cfg, _spectrum(cfg, u, longrun=True), grid), grid, u, POPULATION_H)


def _check_size(X: FunctionalSeries):
    if X.T > MAX_BRUTE_T or X.grid.n > MAX_BRUTE_N:
        raise SizeCapError(f"reference implementations take T <= {MAX_BRUTE_T} and n <= {MAX_BRUTE_N}, "
                           f"got T={X.T}, n={X.grid.n}")


def _literal_weights(u, T_scale, count, h, kernel, factor):
    return [factor * k1_eval(kernel, (u - t / T_scale) / h) / (T_scale * h) for t in range(1, count + 1)]


def _literal_mean(X: FunctionalSeries, weights):
    n = X.grid.n
    mean = [0.0] * n
    for t in range(len(weights)):
        for i in range(n):
            mean[i] += weights[t] * X.values[t, i]
    return mean


def _literal_moment(X: FunctionalSeries, weights, center: bool) -> np.ndarray:
    n = X.grid.n
    mean = _literal_mean(X, weights) if center else [0.0] * n
    out = np.zeros((n, n))
    for t in range(len(weights)):
        for i in range(n):
            for j in range(n):
                out[i, j] += weights[t] * (X.values[t, i] - mean[i]) * (X.values[t, j] - mean[j])
    return out


def brute_force_local_cov(X: FunctionalSeries, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                          center: bool = True) -> LocalCovariance:
    _check_size(X)
    weights = _literal_weights(u, X.T, X.T, h, kernel, 1.0)
    kernel_matrix = _literal_moment(X, weights, center)
    return LocalCovariance((kernel_matrix + kernel_matrix.T) / 2, X.grid, u, h)


def brute_force_prediction_cov(X: FunctionalSeries, T: int, u: float, h: float,
                               kernel: SmoothingKernel = EPANECHNIKOV, center: bool = False) -> LocalCovariance:
    _check_size(X)
    weights = _literal_weights(u, T, X.T, h, kernel, 2.0)
    kernel_matrix = _literal_moment(X, weights, center)
    return LocalCovariance((kernel_matrix + kernel_matrix.T) / 2, X.grid, u, h)


def _literal_autocov(X: FunctionalSeries, weights, mean, lag: int) -> np.ndarray:
    n = X.grid.n
    out = np.zeros((n, n))
    for j in range(lag + 1, X.T + 1):
        for a in range(n):
            for b in range(n):
                out[a, b] += weights[j - 1] * (X.values[j - 1, a] - mean[a]) * (X.values[j - 1 - lag, b] - mean[b])
    return out


def brute_force_local_autocov(X: FunctionalSeries, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                              lag: int = 1) -> LocalCovariance:
    _check_size(X)
    weights = _literal_weights(u, X.T, X.T, h, kernel, 1.0)
    mean = _literal_mean(X, weights)
    return LocalCovariance(_literal_autocov(X, weights, mean, lag), X.grid, u, h, symmetric=False)


def brute_force_longrun_cov(X: FunctionalSeries, u: float, h: float, b: float,
                            k1: SmoothingKernel = EPANECHNIKOV, k2: LagWindowKernel = BARTLETT) -> LocalCovariance:
    """Sums every lag 1..T-1 with its window value, without truncating at the support."""
    _check_size(X)
    weights = _literal_weights(u, X.T, X.T, h, k1, 1.0)
    mean = _literal_mean(X, weights)
    total = _literal_moment(X, weights, center=True)
    for lag in range(1, X.T):
        window = k2_eval(k2, lag / b)
        surface = _literal_autocov(X, weights, mean, lag)
        total += window * (surface + surface.T)
    return LocalCovariance((total + total.T) / 2, X.grid, u, h)
