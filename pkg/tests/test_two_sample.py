from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from lsfts.core import FunctionalSeries, make_uniform_grid
from lsfts.exceptions import (
    DegeneratePValueWarning, GridMismatchError, InvalidOrderError, LsftsError, NumericError, RankDeficiencyError,
    UndefinedOrderError,
)
from lsfts.kernels import BandwidthMode, default_bandwidth_h, local_weights
from lsfts.longrun import longrun_cov
from lsfts.simulate import basis_shift, fourier_basis, simulate_lsfts, sine_mean, spawn_seeds, weak_dependence_config
from lsfts.two_sample import (
    PValueMethod, TwoSampleResult, pooled_longrun, projected_tests, pvalue_weighted_chisq, select_q_ratio, theta_hat,
    u_statistic,
)

from conftest import random_series


class TestSelectQRatio:
    @pytest.mark.parametrize('eigenvalues,q_bar,eps0,expected', [
        ([4.0, 2.0, 1.0, 1e-12, 1e-13], 4, 1e-6, 3),
        ([5.0, 0.0, 0.0], 2, 1e-4, 1),
        ([8.0, 4.0, 2.0, 1.0], 3, 1e-4, 1),
        ([10.0, 9.0, 0.1, 0.09], 3, 1e-4, 2),
    ])
    def test_examples(self, eigenvalues, q_bar, eps0, expected):
        assert select_q_ratio(eigenvalues, q_bar, eps0) == expected

    @pytest.mark.parametrize('q_bar', [0, 3])
    def test_q_bar_range(self, q_bar):
        with pytest.raises(InvalidOrderError):
            select_q_ratio([3.0, 2.0, 1.0], q_bar)

    def test_zero_leading_eigenvalue(self):
        with pytest.raises(UndefinedOrderError):
            select_q_ratio([0.0, 0.0, 0.0], 2)

    def test_invalid_threshold(self):
        with pytest.raises(InvalidOrderError):
            select_q_ratio([3.0, 2.0, 1.0], 2, eps0=0.0)


class TestWeightedChiSquare:
    def test_single_weight_matches_chi_square(self):
        assert pvalue_weighted_chisq([1.0], 3.841, n_mc=100_000, seed=1) == pytest.approx(0.05, abs=0.01)

    def test_two_unit_weights(self):
        assert pvalue_weighted_chisq([1.0, 1.0], 5.991, n_mc=100_000, seed=2) == pytest.approx(0.05, abs=0.01)

    def test_zero_statistic(self):
        assert pvalue_weighted_chisq([1.0, 0.5], 0.0, n_mc=1000, seed=0) == 1.0

    def test_all_zero_weights(self):
        with pytest.warns(DegeneratePValueWarning):
            assert pvalue_weighted_chisq([0.0, 0.0], 1.0, n_mc=1000, seed=0) == 0.0

    def test_deterministic_given_seed(self):
        first = pvalue_weighted_chisq([2.0, 1.0, 0.5], 4.0, n_mc=25_000, seed=7)
        assert pvalue_weighted_chisq([2.0, 1.0, 0.5], 4.0, n_mc=25_000, seed=7) == first

    def test_thread_count_does_not_change_result(self, monkeypatch):
        monkeypatch.setenv('LSFTS_THREADS', '1')
        serial = pvalue_weighted_chisq([1.0, 0.3], 2.0, n_mc=35_000, seed=3)
        monkeypatch.setenv('LSFTS_THREADS', '4')
        assert pvalue_weighted_chisq([1.0, 0.3], 2.0, n_mc=35_000, seed=3) == serial

    def test_too_few_draws(self):
        with pytest.raises(LsftsError):
            pvalue_weighted_chisq([1.0], 1.0, n_mc=10)

    @pytest.mark.parametrize('weights', [[], [1.0, -0.5], [np.nan]])
    def test_invalid_weights(self, weights):
        with pytest.raises(NumericError):
            pvalue_weighted_chisq(weights, 1.0, n_mc=1000)


class TestStatistics:
    def test_identical_samples(self, small_series):
        assert u_statistic(small_series, small_series, 0.5, 0.4) == 0.0

    def test_constant_shift(self):
        grid = make_uniform_grid(33)
        phi = fourier_basis(2, grid)[1]
        c, T, u, h = 1.5, 40, 0.5, 0.3
        X = FunctionalSeries(np.tile(c * phi, (T, 1)), grid)
        Y = FunctionalSeries(np.zeros((T, grid.n)), grid)
        mass = local_weights(u, T, h).sum()
        expected = T * T * h / (2 * T) * (mass * c) ** 2 * (grid.weights @ phi ** 2)
        assert u_statistic(X, Y, u, h) == pytest.approx(expected, rel=1e-10)

    def test_grid_mismatch(self, rng):
        X = random_series(rng, 20, make_uniform_grid(8))
        Y = random_series(rng, 20, make_uniform_grid(9))
        with pytest.raises(GridMismatchError):
            u_statistic(X, Y, 0.5, 0.4)

    def test_theta(self, rng, small_grid):
        X = random_series(rng, 30, small_grid)
        Y = random_series(rng, 10, small_grid)
        assert theta_hat(X, Y) == 0.75


class TestPooledLongrun:
    def test_equal_lengths_average(self, rng, small_grid):
        X = random_series(rng, 30, small_grid)
        Y = random_series(rng, 30, small_grid)
        pooled = pooled_longrun(X, Y, 0.5, 0.4, b=2.0)
        expected = 0.5 * (longrun_cov(X, 0.5, 0.4, 2.0).kernel + longrun_cov(Y, 0.5, 0.4, 2.0).kernel)
        assert_allclose(pooled.kernel, expected, atol=1e-15)

    def test_same_sample(self, small_series):
        pooled = pooled_longrun(small_series, small_series, 0.5, 0.4, b=2.0)
        assert_allclose(pooled.kernel, longrun_cov(small_series, 0.5, 0.4, 2.0).kernel, atol=1e-15)

    def test_unequal_lengths_weight_the_other_sample(self, rng, small_grid):
        X = random_series(rng, 30, small_grid)
        Y = random_series(rng, 10, small_grid)
        pooled = pooled_longrun(X, Y, 0.5, 0.5, b=1.5)
        expected = 0.25 * longrun_cov(X, 0.5, 0.5, 1.5).kernel + 0.75 * longrun_cov(Y, 0.5, 0.5, 1.5).kernel
        assert_allclose(pooled.kernel, expected, atol=1e-14)


class TestProjectedTests:
    def test_identical_samples(self, rng, small_grid):
        X = random_series(rng, 40, small_grid)
        result = projected_tests(X, X, 0.5, 0.4, b=2.0, q=2, n_mc=1000, seed=0)
        assert result.statistic_U == 0.0
        assert result.statistic_Ubar == 0.0
        assert result.statistic_Utilde == 0.0
        assert result.p_value == 1.0
        assert result.p_value_ubar == 1.0 and result.p_value_u == 1.0
        assert result.q_used == 2

    def test_fixed_order_statistics_ordered(self, rng, small_grid):
        X = random_series(rng, 40, small_grid)
        Y = FunctionalSeries(random_series(rng, 40, small_grid).values + 0.5, small_grid)
        result = projected_tests(X, Y, 0.5, 0.4, b=2.0, q=3, weighted_pvalues=False)
        assert result.statistic_Ubar <= result.statistic_U + 1e-12
        assert result.p_value_ubar is None
        assert len(result.eta) >= 3
        assert all(a >= b for a, b in zip(result.eta, result.eta[1:]))

    def test_rank_deficient_pooled_kernel(self, rng):
        grid = make_uniform_grid(17)
        phi = fourier_basis(1, grid)[0]
        X = FunctionalSeries(np.outer(rng.standard_normal(40), phi), grid)
        Y = FunctionalSeries(np.outer(rng.standard_normal(40), phi), grid)
        with pytest.raises(RankDeficiencyError):
            projected_tests(X, Y, 0.5, 0.4, b=2.0, q=3, weighted_pvalues=False)

    def test_invalid_order(self, small_series):
        with pytest.raises(InvalidOrderError):
            projected_tests(small_series, small_series, 0.5, 0.4, b=2.0, q=0)

    def test_auto_order_is_reported(self, rng):
        grid = make_uniform_grid(17)
        basis = fourier_basis(2, grid)
        X = FunctionalSeries((rng.standard_normal((200, 2)) * [2.0, 1.0]) @ basis, grid)
        Y = FunctionalSeries((rng.standard_normal((200, 2)) * [2.0, 1.0]) @ basis, grid)
        result = projected_tests(X, Y, 0.5, 0.3, b=2.0, weighted_pvalues=False)
        assert result.q_used == 2


class TestResult:
    def test_to_dict(self):
        result = TwoSampleResult(1.0, 0.5, 2.0, 2, 0.3, 0.5, eta=[1.0, 0.2])
        payload = result.to_dict()
        assert payload['method'] == 'chisq'
        assert payload['q_used'] == 2
        assert payload['p_value_u'] is None
        assert payload['eta'] == [1.0, 0.2]

    def test_method_enum(self):
        result = TwoSampleResult(1.0, 0.5, 2.0, 2, 0.3, 0.5, method=PValueMethod.MC_WEIGHTED)
        assert result.to_dict()['method'] == 'mc_weighted'

    @pytest.mark.parametrize('kwargs', [
        {'statistic_U': -1.0},
        {'p_value': 1.5},
        {'p_value_ubar': -0.1},
        {'q_used': 0},
    ])
    def test_validation(self, kwargs):
        fields = dict(statistic_U=1.0, statistic_Ubar=0.5, statistic_Utilde=2.0, q_used=2, p_value=0.3,
                      theta_hat=0.5)
        fields.update(kwargs)
        with pytest.raises(ValueError):
            TwoSampleResult(**fields)


def _rejections(shift, replicates, T=1000, level=0.05):
    grid = make_uniform_grid(17)
    base = weak_dependence_config()
    h = default_bandwidth_h(T, BandwidthMode.INFERENCE)
    mean_y = sine_mean()
    mean_x = mean_y + ((basis_shift(shift, 1),) if shift else ())
    rejected = 0
    for seed in spawn_seeds(20240, replicates):
        seed_x, seed_y = spawn_seeds(seed, 2)
        X = simulate_lsfts(replace(base, mean=mean_x), T, grid, seed_x)
        Y = simulate_lsfts(replace(base, mean=mean_y), T, grid, seed_y)
        result = projected_tests(X, Y, 0.5, h, q=2, weighted_pvalues=False)
        rejected += result.p_value < level
    return rejected / replicates


@pytest.mark.slow
def test_size_under_null():
    assert 0.025 <= _rejections(0.0, 1000) <= 0.085


@pytest.mark.slow
def test_power_against_shift():
    assert _rejections(0.5, 50) >= 0.9



class TestStatisticInvariance:
    @staticmethod
    def _pair(seed, T_x=40, T_y=40):
        rng = np.random.default_rng(seed)
        grid = make_uniform_grid(8)
        X = random_series(rng, T_x, grid)
        Y = FunctionalSeries(random_series(rng, T_y, grid).values + 0.3 * np.sin(np.pi * grid.points), grid)
        return X, Y

    @staticmethod
    def _statistics(X, Y):
        result = projected_tests(X, Y, 0.5, 0.4, b=2.0, q=3, weighted_pvalues=False)
        return np.array([result.statistic_U, result.statistic_Ubar, result.statistic_Utilde])

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1))
    def test_swapping_samples(self, seed):
        X, Y = self._pair(seed)
        assert_allclose(self._statistics(Y, X), self._statistics(X, Y), rtol=1e-12)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1))
    def test_swapping_samples_of_unequal_length(self, seed):
        X, Y = self._pair(seed, T_x=50, T_y=30)
        assert_allclose(self._statistics(Y, X), self._statistics(X, Y), rtol=1e-9)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1), st.floats(0.1, 10.0))
    def test_common_rescaling(self, seed, c):
        X, Y = self._pair(seed)
        U, Ubar, Utilde = self._statistics(X, Y)
        scaled = self._statistics(FunctionalSeries(c * X.values, X.grid), FunctionalSeries(c * Y.values, Y.grid))
        # U and Ubar are quadratic in the curves; Utilde is studentized
        assert_allclose(scaled, [c ** 2 * U, c ** 2 * Ubar, Utilde], rtol=1e-8)
