import warnings

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from lsfts.core import EigenSystem, FunctionalSeries, make_uniform_grid, operator_norm_bound
from lsfts.exceptions import EmptyWindowError, HorizonError, InvalidOrderError, InvalidTimeError
from lsfts.kernels import local_weights
from lsfts.local_covariance import local_fpca, weighted_second_moment
from lsfts.prediction import predict_horizons, predict_k_step, prediction_cov, prediction_weights
from lsfts.simulate import (
    brute_force_prediction_cov, fourier_basis, simulate_lsfts, true_eigensystem, true_local_covariance,
)

from conftest import random_series


@pytest.fixture(autouse=True)
def _quiet_boundary():
    # predictions sit at the right end of the sample, inside the boundary zone
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        yield


class TestPredictionCov:
    def test_weights_double_local_weights(self):
        T1, T, u, h = 30, 40, 0.75, 0.2
        assert_allclose(prediction_weights(T1, T, u, h), 2 * local_weights(u, T, h)[:T1], atol=1e-15)

    def test_at_last_observation_time(self, rng, small_grid):
        T1, T, h = 30, 40, 0.3
        u = T1 / T
        X = random_series(rng, T1, small_grid)
        weights = local_weights(u, T, h)[:T1]
        cov = prediction_cov(X, T, u, h)
        assert_allclose(cov.kernel, 2 * weighted_second_moment(X.values, weights, center=False), atol=1e-14)

    def test_constant_curves_centered_is_zero(self):
        grid = make_uniform_grid(9)
        X = FunctionalSeries(np.tile(np.linspace(1, 2, grid.n), (25, 1)), grid)
        cov = prediction_cov(X, 30, 25 / 30, 0.3, center=True, normalized=True)
        assert_allclose(cov.kernel, 0.0, atol=1e-13)

    @pytest.mark.parametrize('seed', range(50))
    @pytest.mark.parametrize('center', [False, True])
    def test_matches_reference(self, seed, center):
        rng = np.random.default_rng(3000 + seed)
        X = random_series(rng, 15, make_uniform_grid(6))
        T = 15 + int(rng.integers(2, 6))
        u = rng.uniform(0.5, 15 / T)
        h = rng.uniform(0.2, 0.5)
        fast = prediction_cov(X, T, u, h, center=center)
        reference = brute_force_prediction_cov(X, T, u, h, center=center)
        assert_allclose(fast.kernel, reference.kernel, rtol=0, atol=1e-10)

    def test_horizon(self, small_series):
        with pytest.raises(HorizonError):
            prediction_weights(small_series.T, small_series.T, 0.5, 0.2)

    def test_u_must_be_inside(self, small_series):
        with pytest.raises(InvalidTimeError):
            prediction_cov(small_series, 30, 1.0, 0.2)

    def test_window_beyond_observations(self, small_series):
        with pytest.raises(EmptyWindowError):
            prediction_cov(small_series, 100, 0.9, 0.05)

    def test_covariance_error_grows_away_from_last_time(self, tvfar):
        grid = make_uniform_grid(9)
        T, k = 2000, 1
        T1 = T - k - 1
        u = T1 / T
        h = T ** (-1 / 3)
        truth = true_local_covariance(tvfar, u, grid)
        at_end, shifted = [], []
        for seed in range(10):
            X = simulate_lsfts(tvfar, T, grid, seed).head(T1)
            at_end.append(operator_norm_bound(prediction_cov(X, T, u, h), truth))
            shifted.append(operator_norm_bound(prediction_cov(X, T, u - 2 * h, h), truth))
        assert np.median(at_end) < np.median(shifted)


class TestPredictKStep:
    def test_curve_in_span_with_exact_eigenfunctions(self, rng):
        grid = make_uniform_grid(17)
        basis = fourier_basis(3, grid)
        values = rng.standard_normal((30, 3)) @ basis
        X = FunctionalSeries(values, grid)
        eigen = EigenSystem(np.array([3.0, 2.0, 1.0]), basis, grid)
        assert_allclose(predict_k_step(X, k=1, eigensystem=eigen), values[-1], atol=1e-12)

    def test_full_rank_reproduces_last_curve(self, rng, small_grid):
        X = random_series(rng, 40, small_grid)
        predicted = predict_k_step(X, k=1, q=small_grid.n, h=0.5)
        assert_allclose(predicted, X.values[-1], atol=1e-10)

    def test_sign_flip_invariance(self, rng):
        grid = make_uniform_grid(17)
        X = random_series(rng, 40, grid)
        eigen = local_fpca(prediction_cov(X, 42, 40 / 42, 0.4), 3)
        flipped = EigenSystem(eigen.eigenvalues, eigen.eigenfunctions * np.array([[-1.0], [1.0], [-1.0]]), grid)
        assert_array_equal(predict_k_step(X, eigensystem=eigen), predict_k_step(X, eigensystem=flipped))

    def test_projection_on_top_components(self, rng):
        grid = make_uniform_grid(17)
        X = random_series(rng, 40, grid)
        T, h = 42, 0.4
        eigen = local_fpca(prediction_cov(X, T, 40 / T, h), 2)
        expected = eigen.scores(X.values[-1]) @ eigen.eigenfunctions
        assert_allclose(predict_k_step(X, k=1, q=2, T=T, h=h), expected, atol=1e-12)

    def test_centered_adds_back_mean(self):
        grid = make_uniform_grid(9)
        m = np.linspace(-1, 1, grid.n)
        X = FunctionalSeries(np.tile(m, (30, 1)), grid)
        predicted = predict_k_step(X, k=1, q=1, h=0.3, center=True, normalized=True)
        assert_allclose(predicted, m, atol=1e-12)

    def test_auto_order(self, rng):
        grid = make_uniform_grid(17)
        basis = fourier_basis(2, grid)
        X = FunctionalSeries((rng.standard_normal((60, 2)) * [2.0, 1.0]) @ basis, grid)
        predicted = predict_k_step(X, k=1, q='auto', h=0.5)
        assert_allclose(predicted, X.values[-1], atol=1e-10)

    def test_horizon_checks(self, small_series):
        with pytest.raises(HorizonError):
            predict_k_step(small_series, k=0)
        with pytest.raises(HorizonError):
            predict_k_step(small_series, k=3, T=small_series.T + 3, h=0.3)

    def test_invalid_order(self, small_series):
        with pytest.raises(InvalidOrderError):
            predict_k_step(small_series, q=0, h=0.5)

    def test_horizons_batch(self, small_series):
        batch = predict_horizons(small_series, [1, 2], q=2, h=0.5)
        assert batch.shape == (2, small_series.grid.n)
        assert_array_equal(batch[1], predict_k_step(small_series, k=2, q=2, h=0.5))

    def test_error_to_oracle_projection_shrinks(self, tvfar):
        grid = make_uniform_grid(9)
        medians = []
        for T in (500, 4000):
            T1 = T - 2
            u = T1 / T
            oracle = true_eigensystem(tvfar, u, grid).truncate(2)
            errors = []
            for seed in range(15):
                X = simulate_lsfts(tvfar, T, grid, seed).head(T1)
                predicted = predict_k_step(X, k=1, q=2, T=T)
                target = oracle.scores(X.values[-1]) @ oracle.eigenfunctions
                errors.append(np.sqrt(grid.weights @ (predicted - target) ** 2))
            medians.append(np.median(errors))
        assert medians[1] < medians[0]
