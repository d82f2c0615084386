from .grid import Grid, make_uniform_grid, grid_from_points, inner_product, l2_norm
from .types import FunctionalSeries, LocalCovariance, EigenSystem
from .operators import operator_eigh, operator_norm_bound, kernel_l2_distance, kl_project

__all__ = [
    'Grid', 'make_uniform_grid', 'grid_from_points', 'inner_product', 'l2_norm',
    'FunctionalSeries', 'LocalCovariance', 'EigenSystem',
    'operator_eigh', 'operator_norm_bound', 'kernel_l2_distance', 'kl_project',
]
