from .kernels import (
    SmoothingKernelType, LagWindowType, SmoothingKernel, LagWindowKernel,
    EPANECHNIKOV, TRIANGULAR, QUARTIC, BARTLETT, PARZEN, TRUNCATED,
    smoothing_kernel, lag_window_kernel, k1_eval, k2_eval, k1_squared_integral,
)
from .bandwidth import BandwidthMode, default_bandwidth_h, default_bandwidth_b
from .weights import kernel_values, local_weights, is_interior, flag_boundary

__all__ = [
    'SmoothingKernelType', 'LagWindowType', 'SmoothingKernel', 'LagWindowKernel',
    'EPANECHNIKOV', 'TRIANGULAR', 'QUARTIC', 'BARTLETT', 'PARZEN', 'TRUNCATED',
    'smoothing_kernel', 'lag_window_kernel', 'k1_eval', 'k2_eval', 'k1_squared_integral',
    'BandwidthMode', 'default_bandwidth_h', 'default_bandwidth_b',
    'kernel_values', 'local_weights', 'is_interior', 'flag_boundary',
]
