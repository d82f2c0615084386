import numpy as np
import pytest

from lsfts.core import FunctionalSeries, make_uniform_grid
from lsfts.simulate import ComponentModel, LinearPath, SimConfig, default_tvfar_config


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def small_grid():
    return make_uniform_grid(8)


@pytest.fixture
def small_series(rng, small_grid):
    return FunctionalSeries(rng.standard_normal((20, small_grid.n)), small_grid)


@pytest.fixture
def tvfar():
    return default_tvfar_config()


def ar1_config(a, sigma=1.0, seed=0) -> SimConfig:
    """One-component model with constant AR coefficient and innovation scale."""
    return SimConfig((ComponentModel(LinearPath(a, a), LinearPath(sigma, sigma)),), seed=seed)


def random_series(rng, T, grid) -> FunctionalSeries:
    return FunctionalSeries(rng.standard_normal((T, grid.n)), grid)
