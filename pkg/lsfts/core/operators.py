import logging
from typing import Optional

import numpy as np
from scipy import linalg

from lsfts.core.types import EigenSystem, LocalCovariance
from lsfts.exceptions import GridMismatchError, InvalidOrderError, NumericError

logger = logging.getLogger(__name__)


def _weighted_matrix(kernel: np.ndarray, weights: np.ndarray) -> np.ndarray:
    # M = W^{1/2} K W^{1/2}, symmetrized against round-off
    root = np.sqrt(weights)
    matrix = root[:, None] * kernel * root[None, :]
    return (matrix + matrix.T) / 2


def _difference(c1: LocalCovariance, c2: Optional[LocalCovariance]) -> np.ndarray:
    if c2 is None:
        return np.asarray(c1.kernel)
    if not c1.grid.same_as(c2.grid):
        raise GridMismatchError("operators live on different grids")
    return c1.kernel - c2.kernel


def operator_eigh(cov: LocalCovariance, q: int) -> EigenSystem:
    """
    Leading q eigenpairs of the integral operator with kernel `cov`

    Solves the quadrature-weighted problem through the symmetric matrix
    W^{1/2} K W^{1/2}; eigenvectors e map back to eigenfunctions v = W^{-1/2} e,
    which are orthonormal under the grid's quadrature.

    Args:
        cov: Symmetric kernel on a grid
        q: Number of eigenpairs, 1 <= q <= n

    Returns:
        EigenSystem: Eigenvalues in descending order with matching eigenfunctions
    """
    n = cov.grid.n
    if q < 1 or q > n:
        raise InvalidOrderError(f"requested {q} eigenpairs of an operator on {n} points")
    if not np.all(np.isfinite(cov.kernel)):
        raise NumericError("kernel contains non-finite values")
    if not cov.symmetric:
        raise NumericError("eigendecomposition needs a symmetric kernel")

    weights = cov.grid.weights
    values, vectors = linalg.eigh(_weighted_matrix(cov.kernel, weights), subset_by_index=[n - q, n - 1])
    order = np.argsort(values)[::-1]
    values = values[order]
    functions = vectors[:, order].T / np.sqrt(weights)[None, :]
    norms = np.sqrt(np.sum(weights[None, :] * functions ** 2, axis=1))
    functions = functions / norms[:, None]
    logger.debug("operator_eigh: n=%d q=%d leading eigenvalue %.6g", n, q, values[0])
    return EigenSystem(values, functions, cov.grid)


def operator_norm_bound(c1: LocalCovariance, c2: Optional[LocalCovariance] = None) -> float:
    """Discretized operator norm of c1 - c2 (c2 omitted means the zero operator)."""
    diff = _difference(c1, c2)
    if not np.all(np.isfinite(diff)):
        raise NumericError("kernel contains non-finite values")
    spectrum = linalg.eigvalsh(_weighted_matrix(diff, c1.grid.weights))
    return float(np.max(np.abs(spectrum)))


def kernel_l2_distance(c1: LocalCovariance, c2: Optional[LocalCovariance] = None) -> float:
    """Quadrature value of the double integral of (c1 - c2)^2 over D x D."""
    diff = _difference(c1, c2)
    weights = c1.grid.weights
    return float(weights @ (diff ** 2) @ weights)


def kl_project(curve, eigensystem: EigenSystem) -> np.ndarray:
    """Truncated Karhunen-Loeve projection sum_j <curve, v_j> v_j."""
    return eigensystem.scores(curve) @ eigensystem.eigenfunctions
