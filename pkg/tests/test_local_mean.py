import warnings
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from lsfts.core import FunctionalSeries, make_uniform_grid
from lsfts.exceptions import DegenerateDirectionError, EmptyWindowError
from lsfts.kernels import EPANECHNIKOV, local_weights
from lsfts.local_mean import clt_standardize, local_mean, mean_path
from lsfts.simulate import LinearPath, MeanProfile, MeanTerm, fourier_basis, simulate_lsfts, sine_mean

from conftest import random_series


def _constant_series(curve, T, grid):
    return FunctionalSeries(np.tile(curve, (T, 1)), grid)


def test_identical_curves_normalized_give_the_curve():
    grid = make_uniform_grid(9)
    m = np.sin(2 * np.pi * grid.points) + 0.3
    X = _constant_series(m, 50, grid)
    assert_allclose(local_mean(X, 0.4, 0.2, normalized=True), m, atol=1e-14)


def test_kernel_weights_hand_example():
    grid = make_uniform_grid(3)
    X = _constant_series(np.ones(grid.n), 4, grid)
    assert_allclose(local_mean(X, 0.5, 0.5), np.full(grid.n, 0.9375), atol=1e-15)


def test_matches_weighted_sum(small_series):
    weights = local_weights(0.5, small_series.T, 0.3)
    assert_allclose(local_mean(small_series, 0.5, 0.3), weights @ small_series.values, atol=1e-15)


def test_mean_path_singleton(small_series):
    path = mean_path(small_series, [0.5], 0.3)
    assert path.ok
    assert_array_equal(path.values[0], local_mean(small_series, 0.5, 0.3))


def test_mean_path_constant_series_rows_identical():
    grid = make_uniform_grid(6)
    X = _constant_series(np.linspace(-1, 1, grid.n), 40, grid)
    path = mean_path(X, [0.3, 0.5, 0.7], 0.2, normalized=True)
    assert_allclose(path.values, np.tile(path.values[0], (3, 1)), atol=1e-14)


def test_mean_path_collects_failures(small_series):
    path = mean_path(small_series, [0.5, 1.5, 0.25], 0.3)
    assert not path.ok
    assert set(path.errors) == {1}
    assert np.all(np.isnan(path.values[1]))
    assert np.all(np.isfinite(path.values[[0, 2]]))


def test_empty_window_raises(small_series):
    with pytest.raises(EmptyWindowError):
        local_mean(small_series, 0.5, 1e-4)


def test_linear_mean_path_is_nearly_linear(tvfar):
    grid = make_uniform_grid(17)
    cfg = replace(tvfar.scaled(0.05), mean=(MeanTerm(MeanProfile.BASIS, LinearPath(-1.0, 3.0), 1),))
    X = simulate_lsfts(cfg, 4000, grid, seed=3)
    u_list = [0.3, 0.4, 0.5, 0.6, 0.7]
    path = mean_path(X, u_list, 0.1, normalized=True)
    levels = path.values @ (grid.weights * fourier_basis(1, grid)[0])
    slope, intercept = np.polyfit(u_list, levels, 1)
    assert slope == pytest.approx(4.0, rel=0.05)
    assert np.max(np.abs(levels - (intercept + slope * np.asarray(u_list)))) < 0.05


def test_mean_error_shrinks_with_T(tvfar):
    grid = make_uniform_grid(17)
    cfg = replace(tvfar, mean=sine_mean())
    errors = {}
    for T in (500, 4000):
        runs = []
        for seed in range(20):
            X = simulate_lsfts(cfg, T, grid, seed=seed)
            diff = local_mean(X, 0.5, T ** (-1 / 3)) - cfg.mean_curves(0.5, grid)[0]
            runs.append(grid.weights @ diff ** 2)
        errors[T] = np.median(runs)
    assert errors[4000] < errors[500]


class TestCltStandardize:
    def test_exact_mean_gives_zero(self):
        grid = make_uniform_grid(5)
        m = np.linspace(0, 1, grid.n)
        X = _constant_series(m, 30, grid)
        target = local_mean(X, 0.5, 0.2)
        direction = np.ones(grid.n)
        assert clt_standardize(X, 0.5, 0.2, EPANECHNIKOV, direction, 1.0, mean=target) == 0.0

    def test_formula(self, small_series):
        grid = small_series.grid
        direction = np.ones(grid.n)
        h = 0.4
        mean = local_mean(small_series, 0.5, h)
        expected = np.sqrt(small_series.T * h) * (grid.weights @ mean) / np.sqrt(2.0 * 0.6)
        assert clt_standardize(small_series, 0.5, h, EPANECHNIKOV, direction, 2.0) == pytest.approx(expected,
                                                                                                     rel=1e-8)

    @pytest.mark.parametrize('value', [0.0, -1.0])
    def test_degenerate_direction(self, small_series, value):
        with pytest.raises(DegenerateDirectionError):
            clt_standardize(small_series, 0.5, 0.3, EPANECHNIKOV, np.ones(small_series.grid.n), value)


class TestLinearity:
    @staticmethod
    def _window(u, T, h, normalized):
        try:
            return local_weights(u, T, h, normalized=normalized)
        except EmptyWindowError:
            return None

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1), st.floats(-3, 3), st.floats(-3, 3), st.floats(0.0, 1.0),
           st.floats(0.05, 1.0), st.booleans())
    def test_linear_in_the_curves(self, seed, a, b, u, h, normalized):
        rng = np.random.default_rng(seed)
        grid = make_uniform_grid(9)
        X = random_series(rng, 30, grid)
        Y = random_series(rng, 30, grid)
        if self._window(u, X.T, h, normalized) is None:
            return
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            combined = local_mean(FunctionalSeries(a * X.values + b * Y.values, grid), u, h, normalized=normalized)
            expected = a * local_mean(X, u, h, normalized=normalized) + b * local_mean(Y, u, h, normalized=normalized)
        assert_allclose(combined, expected, rtol=0, atol=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1), st.floats(0.0, 1.0), st.floats(0.05, 1.0), st.booleans())
    def test_shift_by_a_fixed_curve(self, seed, u, h, normalized):
        rng = np.random.default_rng(seed)
        grid = make_uniform_grid(9)
        X = random_series(rng, 30, grid)
        g = rng.standard_normal(grid.n)
        weights = self._window(u, X.T, h, normalized)
        if weights is None:
            return
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            shifted = local_mean(FunctionalSeries(X.values + g, grid), u, h, normalized=normalized)
            base = local_mean(X, u, h, normalized=normalized)
        # weights sum to one when normalized, to sum(w) otherwise
        assert_allclose(shifted, base + weights.sum() * g, rtol=0, atol=1e-12)
