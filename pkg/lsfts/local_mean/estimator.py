import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

import numpy as np

from lsfts.core import FunctionalSeries, inner_product
from lsfts.exceptions import DegenerateDirectionError, LsftsError
from lsfts.kernels import EPANECHNIKOV, SmoothingKernel, flag_boundary, k1_squared_integral, local_weights

logger = logging.getLogger(__name__)


def local_mean(X: FunctionalSeries, u: float, h: float, kernel: SmoothingKernel = EPANECHNIKOV,
               normalized: bool = False) -> np.ndarray:
    """
    Locally weighted sample mean at rescaled time u

    Args:
        X: Observed series
        u: Rescaled time in [0, 1]
        h: Bandwidth
        kernel: Smoothing kernel K1
        normalized: Use weights summing to one instead of the 1/(T h) factor

    Returns:
        np.ndarray: The mean curve on X.grid
    """
    weights = local_weights(u, X.T, h, kernel, normalized)
    flag_boundary(u, h, kernel)
    return weights @ X.values


@dataclass
class MeanPath:
    """Local means along a list of rescaled times; failed rows are NaN and listed in `errors`."""
    u: np.ndarray
    values: np.ndarray
    errors: Dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors


def mean_path(X: FunctionalSeries, u_list: Sequence[float], h: float, kernel: SmoothingKernel = EPANECHNIKOV,
              normalized: bool = False) -> MeanPath:
    u_values = np.asarray(u_list, dtype=float)
    values = np.full((u_values.size, X.grid.n), np.nan)
    errors = {}
    for i, u in enumerate(u_values):
        try:
            values[i] = local_mean(X, float(u), h, kernel, normalized)
        except LsftsError as e:
            logger.warning(f"local mean at u={u} failed: {e}")
            errors[i] = str(e)
    return MeanPath(u_values, values, errors)


def clt_standardize(X: FunctionalSeries, u: float, h: float, kernel: SmoothingKernel, direction,
                    longrun_value: float, mean: Optional[np.ndarray] = None) -> float:
    """
    Standardized projection of the local mean error onto a direction

    Computes sqrt(T h) <Xbar(u) - m(u), d> / sqrt(longrun_value * int K1^2), which is
    asymptotically standard normal when longrun_value = <c(u) d, d>.

    Args:
        X: Observed series
        u: Rescaled time
        h: Bandwidth
        kernel: Smoothing kernel K1
        direction: Unit-norm curve d
        longrun_value: <c(u) d, d> for the long-run kernel c(u)
        mean: Mean curve m(u, .) to subtract; zero when omitted

    Returns:
        float: The standardized statistic
    """
    if not longrun_value > 0:
        raise DegenerateDirectionError(f"long-run value along the direction must be positive, got {longrun_value}")
    centered = local_mean(X, u, h, kernel)
    if mean is not None:
        centered = centered - np.asarray(mean, dtype=float)
    projection = inner_product(centered, direction, X.grid)
    return float(np.sqrt(X.T * h) * projection / np.sqrt(longrun_value * k1_squared_integral(kernel)))
