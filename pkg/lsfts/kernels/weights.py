import logging
import warnings

import numpy as np

from lsfts.exceptions import BoundaryWarning, EmptyWindowError, InvalidBandwidthError, InvalidTimeError
from lsfts.kernels.kernels import EPANECHNIKOV, SmoothingKernel, k1_eval

logger = logging.getLogger(__name__)


def _check_window(u: float, h: float):
    if not 0.0 <= u <= 1.0:
        raise InvalidTimeError(f"rescaled time must lie in [0, 1], got u={u}")
    if not (h > 0 and np.isfinite(h)):
        raise InvalidBandwidthError(f"bandwidth must be positive, got h={h}")


def kernel_values(u: float, T: int, h: float, kernel: SmoothingKernel = EPANECHNIKOV) -> np.ndarray:
    """K1((u - t/T)/h) for t = 1..T."""
    _check_window(u, h)
    times = np.arange(1, T + 1) / T
    return np.asarray(k1_eval(kernel, (u - times) / h))


def local_weights(u: float, T: int, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
                  normalized: bool = False) -> np.ndarray:
    """
    Local weight vector for rescaled time u

    Args:
        u: Rescaled time in [0, 1]
        T: Sample size
        h: Bandwidth
        kernel: Smoothing kernel K1
        normalized: Divide by the kernel sum instead of T*h so the weights sum to one

    Returns:
        np.ndarray: Weights w_1..w_T
    """
    values = kernel_values(u, T, h, kernel)
    total = values.sum()
    if not total > 0:
        raise EmptyWindowError(f"no observation receives weight at u={u} with h={h} and T={T}")
    if normalized:
        return values / total
    return values / (T * h)


def is_interior(u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV) -> bool:
    radius = kernel.support_radius * h
    return radius <= u <= 1.0 - radius


def flag_boundary(u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV) -> bool:
    """Warn when u falls in the boundary zone; returns the flag to store on results."""
    if is_interior(u, h, kernel):
        return False
    warnings.warn(f"u={u} lies outside [C1*h, 1 - C1*h] for h={h}; interior rates do not apply",
                  BoundaryWarning, stacklevel=3)
    return True
