import logging
import warnings
from dataclasses import dataclass

import numpy as np

from lsfts.core import EigenSystem, FunctionalSeries, Grid, LocalCovariance, inner_product, kl_project, operator_eigh
from lsfts.exceptions import AmbiguousSignWarning, ClippedEigenvalueWarning, NotPSDError
from lsfts.kernels import EPANECHNIKOV, SmoothingKernel, flag_boundary, local_weights

logger = logging.getLogger(__name__)

NEGATIVE_EIGENVALUE_TOL = 1e-10


def weighted_second_moment(values: np.ndarray, weights: np.ndarray, center: bool) -> np.ndarray:
    """
    sum_t w_t (x_t - xbar) (x_t - xbar)^T, with xbar = sum_t w_t x_t when centering

    The result is symmetrized so that it equals its transpose exactly.
    """
    rows = values
    if center:
        rows = values - weights @ values
    moment = (rows * weights[:, None]).T @ rows
    return (moment + moment.T) / 2


def local_cov(X: FunctionalSeries, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
              center: bool = True, normalized: bool = False) -> LocalCovariance:
    """
    Empirical local covariance operator at rescaled time u

    Args:
        X: Observed series
        u: Rescaled time in [0, 1]
        h: Bandwidth
        kernel: Smoothing kernel K1
        center: Subtract the local mean at u (same weights) from every curve first
        normalized: Use weights summing to one instead of the 1/(T h) factor

    Returns:
        LocalCovariance: Kernel matrix tagged with u and h
    """
    weights = local_weights(u, X.T, h, kernel, normalized)
    boundary = flag_boundary(u, h, kernel)
    kernel_matrix = weighted_second_moment(X.values, weights, center)
    logger.debug(f"local_cov: u={u} h={h} T={X.T} n={X.grid.n} center={center}")
    return LocalCovariance(kernel_matrix, X.grid, u, h, boundary=boundary)


def local_fpca(cov: LocalCovariance, q: int) -> EigenSystem:
    """
    Local functional principal components of a covariance estimate

    Eigenvalues within NEGATIVE_EIGENVALUE_TOL (relative to the leading one) below zero
    are set to zero with a ClippedEigenvalueWarning; anything more negative means the
    operator is not a covariance.
    """
    eigen = operator_eigh(cov, q)
    values = eigen.eigenvalues
    tolerance = NEGATIVE_EIGENVALUE_TOL * max(1.0, abs(float(values[0])))
    if values.min() < -tolerance:
        raise NotPSDError(f"eigenvalue {values.min():.3e} is below -{tolerance:.1e}; "
                          "kernel is not positive semidefinite")
    if values.min() < 0:
        warnings.warn(f"clamped {int((values < 0).sum())} negative eigenvalue(s) down to {values.min():.3e} at zero",
                      ClippedEigenvalueWarning, stacklevel=2)
        values = np.clip(values, 0.0, None)
    return EigenSystem(values, eigen.eigenfunctions, eigen.grid)


def align_sign(v_hat, v_ref, grid: Grid) -> np.ndarray:
    """Flip v_hat so that <v_hat, v_ref> >= 0; an exactly orthogonal pair is left as is."""
    v_hat = np.asarray(v_hat, dtype=float)
    product = inner_product(v_hat, v_ref, grid)
    if product == 0:
        warnings.warn("sign alignment is ambiguous: curves are orthogonal", AmbiguousSignWarning, stacklevel=2)
        return v_hat.copy()
    return v_hat if product > 0 else -v_hat


@dataclass(frozen=True, eq=False)
class KLApproximation:
    """Curves projected on their own local eigenbasis and the share of squared norm retained."""
    series: FunctionalSeries
    retained: float


def local_kl_approximation(X: FunctionalSeries, q: int, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                           center: bool = True, normalized: bool = False) -> KLApproximation:
    """
    Project each X_t on the top-q eigenfunctions of the local covariance at t/T

    With centering the projection acts on X_t minus the local mean at t/T, which is
    added back afterwards.
    """
    weights = X.grid.weights
    approximations = np.empty_like(X.values)
    kept = 0.0
    total = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        for t in range(X.T):
            u = (t + 1) / X.T
            w = local_weights(u, X.T, h, kernel, normalized)
            offset = w @ X.values if center else np.zeros(X.grid.n)
            cov = LocalCovariance(weighted_second_moment(X.values, w, center), X.grid, u, h)
            eigen = local_fpca(cov, q)
            residual = X.values[t] - offset
            projected = kl_project(residual, eigen)
            approximations[t] = offset + projected
            kept += float(weights @ projected ** 2)
            total += float(weights @ residual ** 2)
    retained = kept / total if total > 0 else 1.0
    logger.info(f"local KL approximation with q={q} retains {retained:.4f} of squared norm")
    return KLApproximation(FunctionalSeries(approximations, X.grid), retained)
