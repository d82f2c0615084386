from .config import TwoSampleConfig
from .selection import select_q_ratio
from .pvalues import pvalue_weighted_chisq
from .result import TwoSampleResult, PValueMethod
from .procedures import u_statistic, pooled_longrun, projected_tests, mean_difference, theta_hat

__all__ = [
    'TwoSampleConfig', 'select_q_ratio', 'pvalue_weighted_chisq', 'TwoSampleResult', 'PValueMethod',
    'u_statistic', 'pooled_longrun', 'projected_tests', 'mean_difference', 'theta_hat',
]
