from .estimator import local_mean, mean_path, clt_standardize, MeanPath

__all__ = ['local_mean', 'mean_path', 'clt_standardize', 'MeanPath']
