from .estimator import local_autocov, longrun_cov, longrun_direction_value, max_lag, clip_spectrum

__all__ = ['local_autocov', 'longrun_cov', 'longrun_direction_value', 'max_lag', 'clip_spectrum']
