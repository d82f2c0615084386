from .config import PredictionConfig
from .predictor import prediction_weights, prediction_cov, predict_k_step, predict_horizons

__all__ = ['PredictionConfig', 'prediction_weights', 'prediction_cov', 'predict_k_step', 'predict_horizons']
