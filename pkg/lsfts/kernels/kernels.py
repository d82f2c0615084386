from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Union

import numpy as np
from scipy import integrate

ArrayLike = Union[float, np.ndarray]


class SmoothingKernelType(str, Enum):
    EPANECHNIKOV = 'epanechnikov'
    TRIANGULAR = 'triangular'
    QUARTIC = 'quartic'


class LagWindowType(str, Enum):
    BARTLETT = 'bartlett'
    PARZEN = 'parzen'
    TRUNCATED = 'truncated'


@dataclass(frozen=True)
class SmoothingKernel:
    """Symmetric, Lipschitz, compactly supported kernel K1 integrating to one."""
    id: SmoothingKernelType = SmoothingKernelType.EPANECHNIKOV
    support_radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'id', SmoothingKernelType(self.id))


@dataclass(frozen=True)
class LagWindowKernel:
    """Bounded, compactly supported lag window K2 with K2(0) = 1."""
    id: LagWindowType = LagWindowType.BARTLETT
    support_radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'id', LagWindowType(self.id))


EPANECHNIKOV = SmoothingKernel(SmoothingKernelType.EPANECHNIKOV)
TRIANGULAR = SmoothingKernel(SmoothingKernelType.TRIANGULAR)
QUARTIC = SmoothingKernel(SmoothingKernelType.QUARTIC)

BARTLETT = LagWindowKernel(LagWindowType.BARTLETT)
PARZEN = LagWindowKernel(LagWindowType.PARZEN)
TRUNCATED = LagWindowKernel(LagWindowType.TRUNCATED)


def smoothing_kernel(name: str) -> SmoothingKernel:
    return SmoothingKernel(SmoothingKernelType(name))


def lag_window_kernel(name: str) -> LagWindowKernel:
    return LagWindowKernel(LagWindowType(name))


def _as_output(values: np.ndarray, scalar: bool) -> ArrayLike:
    return float(values) if scalar else values


def k1_eval(kernel: SmoothingKernel, v: ArrayLike) -> ArrayLike:
    """
    Evaluate the smoothing kernel K1

    Args:
        kernel: Kernel to evaluate
        v: Scalar or array of arguments

    Returns:
        Kernel values, zero outside [-C1, C1]
    """
    scalar = np.ndim(v) == 0
    x = np.abs(np.asarray(v, dtype=float)) / kernel.support_radius
    inside = x <= 1.0
    if kernel.id is SmoothingKernelType.EPANECHNIKOV:
        values = 0.75 * (1.0 - x ** 2)
    elif kernel.id is SmoothingKernelType.TRIANGULAR:
        values = 1.0 - x
    else:
        values = (15.0 / 16.0) * (1.0 - x ** 2) ** 2
    values = np.where(inside, values, 0.0) / kernel.support_radius
    return _as_output(values, scalar)


def k2_eval(kernel: LagWindowKernel, v: ArrayLike) -> ArrayLike:
    """Evaluate the lag window K2; K2(0) = 1 exactly and K2 vanishes beyond C2."""
    scalar = np.ndim(v) == 0
    x = np.abs(np.asarray(v, dtype=float)) / kernel.support_radius
    inside = x <= 1.0
    if kernel.id is LagWindowType.BARTLETT:
        values = 1.0 - x
    elif kernel.id is LagWindowType.PARZEN:
        values = np.where(x <= 0.5, 1.0 - 6.0 * x ** 2 + 6.0 * x ** 3, 2.0 * (1.0 - x) ** 3)
    else:
        values = np.ones_like(x)
    values = np.where(inside, values, 0.0)
    return _as_output(values, scalar)


@lru_cache(maxsize=None)
def k1_squared_integral(kernel: SmoothingKernel) -> float:
    """Integral of K1^2 over its support (0.6 for Epanechnikov)."""
    radius = kernel.support_radius
    value, _ = integrate.quad(lambda z: k1_eval(kernel, z) ** 2, -radius, radius,
                              epsabs=1e-12, epsrel=1e-10, points=[0.0])
    return float(value)
