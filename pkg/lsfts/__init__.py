"""Kernel estimation and inference for locally stationary functional time series."""

__version__ = '1.0.0'
