import logging
from typing import Optional

import numpy as np
from scipy import signal

from lsfts.core import FunctionalSeries, Grid
from lsfts.exceptions import InvalidTimeError, ShapeError
from lsfts.simulate.basis import fourier_basis
from lsfts.simulate.config import SimulationConfig
from lsfts.simulate.model import SimConfig
from lsfts.simulate.seeding import component_generators

logger = logging.getLogger(__name__)


def _innovations(cfg: SimConfig, steps: int, seed: int) -> np.ndarray:
    # K x steps, one independent stream per component
    return np.vstack([rng.standard_normal(steps) for rng in component_generators(seed, cfg.K)])


def _prepare(cfg: SimConfig, T: int, seed: Optional[int]):
    if T < 2:
        raise ShapeError(f"need T >= 2, got {T}")
    cfg.validate()
    burn_in = SimulationConfig().burn_in
    seed = cfg.seed if seed is None else seed
    return burn_in, _innovations(cfg, burn_in + T, seed)


def simulate_lsfts(cfg: SimConfig, T: int, grid: Grid, seed: Optional[int] = None) -> FunctionalSeries:
    """
    Simulate X_{t,T}, t = 1..T, from a locally stationary model

    Each coefficient follows xi_t = a(t/T) xi_{t-1} + sigma(t/T) e_t. The burn-in runs
    with the coefficients frozen at u = 0 and is discarded.

    Args:
        cfg: Model description
        T: Sample size
        grid: Grid to sample the curves on
        seed: Overrides cfg.seed when given

    Returns:
        FunctionalSeries: The simulated curves, deterministic given the seed
    """
    burn_in, innovations = _prepare(cfg, T, seed)
    u = np.arange(1, T + 1) / T
    a = np.array([c.a(u) for c in cfg.components])
    sigma = np.array([c.sigma(u) for c in cfg.components])
    a0 = np.array([c.a(0.0) for c in cfg.components])
    sigma0 = np.array([c.sigma(0.0) for c in cfg.components])

    xi = np.zeros(cfg.K)
    for step in range(burn_in):
        xi = a0 * xi + sigma0 * innovations[:, step]
    coefficients = np.empty((T, cfg.K))
    for t in range(T):
        xi = a[:, t] * xi + sigma[:, t] * innovations[:, burn_in + t]
        coefficients[t] = xi

    values = coefficients @ fourier_basis(cfg.K, grid)
    if cfg.mean:
        values = values + cfg.mean_curves(u, grid)
    logger.debug(f"simulated T={T} curves with K={cfg.K} components on n={grid.n} points")
    return FunctionalSeries(values, grid)


def stationary_approx(cfg: SimConfig, u: float, T: int, grid: Grid, seed: Optional[int] = None) -> FunctionalSeries:
    """
    Stationary companion X_t^(u): the same recursion with coefficients frozen at u

    Uses the innovations simulate_lsfts draws for the same seed, so both processes are
    coupled through shared shocks.
    """
    if not 0.0 <= u <= 1.0:
        raise InvalidTimeError(f"rescaled time must lie in [0, 1], got u={u}")
    burn_in, innovations = _prepare(cfg, T, seed)
    coefficients = np.empty((T, cfg.K))
    for k, component in enumerate(cfg.components):
        path = signal.lfilter([component.sigma(u)], [1.0, -component.a(u)], innovations[k])
        coefficients[:, k] = path[burn_in:]
    values = coefficients @ fourier_basis(cfg.K, grid)
    if cfg.mean:
        values = values + cfg.mean_curves(u, grid)
    return FunctionalSeries(values, grid)
