"""
Monte Carlo experiments behind the bench command

Each experiment is a replicate function (params, T, seed) -> record and a summary
that turns the per-replicate records into the published table.
"""

from dataclasses import dataclass, replace
from typing import Callable, Dict

import numpy as np
import pandas as pd
from scipy import stats

from lsfts.core import kernel_l2_distance, kl_project, l2_norm, make_uniform_grid, operator_eigh
from lsfts.kernels import EPANECHNIKOV, BandwidthMode, default_bandwidth_h, k1_squared_integral, local_weights
from lsfts.local_covariance import local_cov, local_fpca
from lsfts.local_mean import clt_standardize, local_mean
from lsfts.longrun import longrun_cov, longrun_direction_value
from lsfts.prediction import predict_k_step
from lsfts.simulate import (
    basis_shift, default_tvfar_config, simulate_lsfts, sine_mean, spawn_seeds, true_eigensystem,
    true_longrun_cov, true_longrun_eigensystem, weak_dependence_config,
)
from lsfts.two_sample import TwoSampleConfig, projected_tests, select_q_ratio

Record = Dict[str, float]


@dataclass(frozen=True)
class Experiment:
    replicate: Callable[[dict, int, int], Record]
    summarize: Callable[[dict, pd.DataFrame], pd.DataFrame]
    replicated: bool = True


def _grid(params: dict):
    return make_uniform_grid(int(params.get('n', 33)))


def _slope(table: pd.DataFrame, column: str) -> float:
    return float(np.polyfit(np.log(table['T']), np.log(table[column]), 1)[0])


def _median_by_T(frame: pd.DataFrame, column: str, fit_slope: bool = False) -> pd.DataFrame:
    table = frame.groupby('T', sort=True)[column].agg(['median', 'count']).reset_index()
    table = table.rename(columns={'median': f'median_{column}', 'count': 'replicates'})
    if fit_slope:
        table['slope'] = _slope(table, f'median_{column}')
    return table


def eigen_rate(params: dict, T: int, seed: int) -> Record:
    grid = _grid(params)
    u = float(params['u'])
    cfg = default_tvfar_config()
    X = simulate_lsfts(cfg, T, grid, seed)
    estimate = local_fpca(local_cov(X, u, default_bandwidth_h(T)), 1).eigenvalues[0]
    truth = true_eigensystem(cfg, u, grid).eigenvalues[0]
    return {'abs_error': abs(float(estimate) - float(truth))}


def mean_rate(params: dict, T: int, seed: int) -> Record:
    grid = _grid(params)
    u = float(params['u'])
    cfg = replace(default_tvfar_config(), mean=sine_mean())
    X = simulate_lsfts(cfg, T, grid, seed)
    diff = local_mean(X, u, default_bandwidth_h(T)) - cfg.mean_curves(u, grid)[0]
    return {'sq_error': float(grid.weights @ diff ** 2)}


def clt(params: dict, T: int, seed: int) -> Record:
    grid = _grid(params)
    u = float(params['u'])
    cfg = default_tvfar_config()
    direction = true_longrun_eigensystem(cfg, u, grid).eigenfunctions[0]
    value = longrun_direction_value(true_longrun_cov(cfg, u, grid), direction)
    X = simulate_lsfts(cfg, T, grid, seed)
    h = default_bandwidth_h(T, BandwidthMode.INFERENCE)
    return {'z': clt_standardize(X, u, h, EPANECHNIKOV, direction, value)}


def summarize_clt(params: dict, frame: pd.DataFrame) -> pd.DataFrame:
    rows = []
    for T, group in frame.groupby('T', sort=True):
        z = group['z'].to_numpy()
        rows.append({
            'T': T,
            'replicates': z.size,
            'mean': float(np.mean(z)),
            'variance': float(np.var(z, ddof=1)),
            'ks_distance': float(stats.kstest(z, 'norm').statistic),
            'k1_squared_integral': k1_squared_integral(EPANECHNIKOV),
        })
    return pd.DataFrame(rows)


def longrun_consistency(params: dict, T: int, seed: int) -> Record:
    grid = _grid(params)
    u = float(params['u'])
    cfg = default_tvfar_config()
    X = simulate_lsfts(cfg, T, grid, seed)
    estimate = longrun_cov(X, u, default_bandwidth_h(T))
    return {'ise': kernel_l2_distance(estimate, true_longrun_cov(cfg, u, grid))}


def _two_sample(params: dict, T: int, seed: int, shift: float) -> Record:
    grid = _grid(params)
    u = float(params['u'])
    base = weak_dependence_config()
    mean_y = sine_mean()
    mean_x = mean_y
    if shift:
        # the leading long-run eigenfunction is the basis function with the largest long-run variance
        spectrum = [float(c.sigma(u)) ** 2 / (1.0 - float(c.a(u))) ** 2 for c in base.components]
        mean_x = mean_y + (basis_shift(shift, int(np.argmax(spectrum)) + 1),)
    seed_x, seed_y = spawn_seeds(seed, 2)
    X = simulate_lsfts(replace(base, mean=mean_x), T, grid, seed_x)
    Y = simulate_lsfts(replace(base, mean=mean_y), T, grid, seed_y)
    h = default_bandwidth_h(T, BandwidthMode.INFERENCE)
    result = projected_tests(X, Y, u, h, q=params.get('q', 'auto'), weighted_pvalues=False)
    return {'p_value': result.p_value, 'reject': float(result.p_value < float(params['level']))}


def two_sample_size(params: dict, T: int, seed: int) -> Record:
    return _two_sample(params, T, seed, shift=0.0)


def two_sample_power(params: dict, T: int, seed: int) -> Record:
    return _two_sample(params, T, seed, shift=float(params['shift']))


def summarize_rejections(params: dict, frame: pd.DataFrame) -> pd.DataFrame:
    table = frame.groupby('T', sort=True)['reject'].agg(['mean', 'count']).reset_index()
    table = table.rename(columns={'mean': 'rejection_rate', 'count': 'replicates'})
    table['level'] = float(params['level'])
    return table


def q_selector(params: dict, T: int, seed: int) -> Record:
    grid = _grid(params)
    u = float(params['u'])
    X = simulate_lsfts(weak_dependence_config(), T, grid, seed)
    estimate = longrun_cov(X, u, default_bandwidth_h(T))
    eta = operator_eigh(estimate, grid.n).eigenvalues * k1_squared_integral(EPANECHNIKOV)
    q_bar = min(TwoSampleConfig().q_bar, grid.n - 1)
    chosen = select_q_ratio(eta, q_bar, float(params['eps0']))
    return {'q_hat': float(chosen), 'hit': float(chosen == int(params['rank']))}


def summarize_selector(params: dict, frame: pd.DataFrame) -> pd.DataFrame:
    table = frame.groupby('T', sort=True)['hit'].agg(['mean', 'count']).reset_index()
    table = table.rename(columns={'mean': 'hit_rate', 'count': 'replicates'})
    table['rank'] = int(params['rank'])
    return table


def prediction(params: dict, T: int, seed: int) -> Record:
    """
    Distance of the predictor to the oracle projection of the last observed curve

    The oracle uses the true top-q eigenfunctions at u = T1/T. The distance to the
    projection of the curve k steps ahead and the error when u is moved back by 2h
    are reported alongside.
    """
    grid = _grid(params)
    k = int(params['k'])
    q = int(params['q'])
    cfg = default_tvfar_config()
    X = simulate_lsfts(cfg, T, grid, seed)
    T1 = T - k - 1
    observed = X.head(T1)
    u = T1 / T
    h = default_bandwidth_h(T)
    oracle = true_eigensystem(cfg, u, grid).truncate(q)
    predicted = predict_k_step(observed, k, q, T=T, h=h)
    shifted = predict_k_step(observed, k, q, T=T, u=u - 2 * h, h=h)
    target = kl_project(observed.values[-1], oracle)
    future = kl_project(X.values[T1 + k - 1], oracle)
    return {
        'error': l2_norm(predicted - target, grid),
        'error_shifted_u': l2_norm(shifted - target, grid),
        'error_future': l2_norm(predicted - future, grid),
    }


def summarize_prediction(params: dict, frame: pd.DataFrame) -> pd.DataFrame:
    table = frame.groupby('T', sort=True).agg(
        replicates=('error', 'count'),
        median_error=('error', 'median'),
        median_error_shifted_u=('error_shifted_u', 'median'),
        median_error_future=('error_future', 'median'),
    ).reset_index()
    return table


def riemann_sum(params: dict, T: int, seed: int) -> Record:
    h = float(params['h'])
    record = {}
    for u in params['u']:
        record[f'abs_error_u{u}'] = abs(float(local_weights(float(u), T, h).sum()) - 1.0)
    return record


def summarize_riemann(params: dict, frame: pd.DataFrame) -> pd.DataFrame:
    rows = []
    for _, row in frame.sort_values('T').iterrows():
        for u in params['u']:
            rows.append({'u': float(u), 'T': int(row['T']), 'h': float(params['h']),
                         'abs_error': float(row[f'abs_error_u{u}'])})
    return pd.DataFrame(rows).sort_values(['u', 'T'], kind='stable').reset_index(drop=True)


EXPERIMENTS: Dict[str, Experiment] = {
    'eigen-rate': Experiment(eigen_rate, lambda p, f: _median_by_T(f, 'abs_error', fit_slope=True)),
    'mean-rate': Experiment(mean_rate, lambda p, f: _median_by_T(f, 'sq_error', fit_slope=True)),
    'clt': Experiment(clt, summarize_clt),
    'longrun-consistency': Experiment(longrun_consistency, lambda p, f: _median_by_T(f, 'ise')),
    'two-sample-size': Experiment(two_sample_size, summarize_rejections),
    'two-sample-power': Experiment(two_sample_power, summarize_rejections),
    'q-selector': Experiment(q_selector, summarize_selector),
    'prediction': Experiment(prediction, summarize_prediction),
    'riemann-sum': Experiment(riemann_sum, summarize_riemann, replicated=False),
}
