from .model import (
    SimConfig, ComponentModel, LinearPath, MeanTerm, MeanProfile,
    load_sim_config, default_tvfar_config, weak_dependence_config, sine_mean, basis_shift,
)
from .basis import fourier_basis
from .seeding import spawn_seeds
from .generator import simulate_lsfts, stationary_approx
from .oracles import (
    true_local_covariance, true_eigensystem, true_longrun_cov, true_longrun_eigensystem,
    brute_force_local_cov, brute_force_prediction_cov, brute_force_local_autocov, brute_force_longrun_cov,
)

__all__ = [
    'SimConfig', 'ComponentModel', 'LinearPath', 'MeanTerm', 'MeanProfile',
    'load_sim_config', 'default_tvfar_config', 'weak_dependence_config', 'sine_mean', 'basis_shift',
    'fourier_basis', 'spawn_seeds', 'simulate_lsfts', 'stationary_approx',
    'true_local_covariance', 'true_eigensystem', 'true_longrun_cov', 'true_longrun_eigensystem',
    'brute_force_local_cov', 'brute_force_prediction_cov', 'brute_force_local_autocov', 'brute_force_longrun_cov',
]
