from .estimator import (
    local_cov, local_fpca, align_sign, weighted_second_moment,
    local_kl_approximation, KLApproximation, NEGATIVE_EIGENVALUE_TOL,
)

__all__ = [
    'local_cov', 'local_fpca', 'align_sign', 'weighted_second_moment',
    'local_kl_approximation', 'KLApproximation', 'NEGATIVE_EIGENVALUE_TOL',
]
