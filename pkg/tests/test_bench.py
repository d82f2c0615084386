import numpy as np
import pandas as pd
import pytest

from lsfts.bench import (
    EXPERIMENTS, MANIFEST_VERSION, load_manifest, parse_manifest, replicate_seeds, run_experiment, run_replicates,
)
from lsfts.exceptions import DataError, UsageError


@pytest.fixture
def small_manifest():
    return parse_manifest({
        'version': MANIFEST_VERSION,
        'experiments': {
            'eigen-rate': {'T': [100, 200], 'replicates': 3, 'u': 0.5, 'n': 9},
            'two-sample-size': {'T': [300], 'replicates': 4, 'u': 0.5, 'n': 9, 'q': 2, 'level': 0.05},
        },
    }, known=EXPERIMENTS)


class TestManifest:
    def test_packaged_manifest_covers_every_experiment(self):
        manifest = load_manifest(known=EXPERIMENTS)
        assert manifest.version == MANIFEST_VERSION
        assert set(manifest.experiments) == set(EXPERIMENTS)

    def test_params_are_a_copy(self):
        manifest = load_manifest()
        params = manifest.params('clt')
        params['T'] = [1]
        assert manifest.params('clt')['T'] == [2000]

    def test_unknown_experiment(self):
        with pytest.raises(UsageError):
            load_manifest().params('no-such-experiment')

    @pytest.mark.parametrize('payload', [
        [],
        {'version': '1.0'},
        {'version': '2.0', 'experiments': {}},
        {'version': '1.0', 'experiments': {'clt': {'replicates': 3}}},
        {'version': '1.0', 'experiments': {'clt': {'T': []}}},
        {'version': '1.0', 'experiments': {'made-up': {'T': [10]}}},
    ])
    def test_invalid_payload(self, payload):
        with pytest.raises(DataError):
            parse_manifest(payload, known=EXPERIMENTS)

    def test_minor_version_is_accepted(self):
        assert parse_manifest({'version': '1.3', 'experiments': {}}).version == '1.3'

    def test_invalid_json_reports_line(self, tmp_path):
        path = tmp_path / 'manifest.json'
        path.write_text('{\n  "version": "1.0",\n  "experiments": {,\n}\n')
        with pytest.raises(DataError) as info:
            load_manifest(path)
        assert info.value.line == 3


class TestSeeds:
    def test_layout(self):
        tasks = replicate_seeds(0, [100, 200], 3)
        assert [(T, index) for T, index, _ in tasks] == [(100, 0), (100, 1), (100, 2), (200, 0), (200, 1), (200, 2)]
        assert len({seed for _, _, seed in tasks}) == 6

    def test_seed_depends_only_on_position(self):
        short = replicate_seeds(5, [100, 200], 2)
        longer = replicate_seeds(5, [100, 200], 4)
        assert short[:2] == longer[:2]
        assert short[2:] == longer[4:6]


class TestRunner:
    def test_riemann_sum_decreases_in_T(self):
        table = run_experiment('riemann-sum')
        for _, group in table.groupby('u'):
            errors = group.sort_values('T')['abs_error'].to_numpy()
            assert np.all(np.diff(errors) < 0)

    def test_thread_count_does_not_change_records(self, small_manifest):
        serial = run_replicates('eigen-rate', small_manifest, seed=1, threads=1)
        parallel = run_replicates('eigen-rate', small_manifest, seed=1, threads=4)
        pd.testing.assert_frame_equal(serial, parallel)
        assert list(serial.columns) == ['T', 'replicate', 'abs_error']
        assert len(serial) == 6

    def test_summary_columns(self, small_manifest):
        table = run_experiment('eigen-rate', small_manifest, seed=1)
        assert list(table['T']) == [100, 200]
        assert list(table['replicates']) == [3, 3]
        assert {'median_abs_error', 'slope'} <= set(table.columns)

    def test_replicates_override(self, small_manifest):
        frame = run_replicates('two-sample-size', small_manifest, replicates=2, seed=3)
        assert len(frame) == 2
        assert set(frame['reject'].unique()) <= {0.0, 1.0}

    def test_replicates_from_environment(self, small_manifest, monkeypatch):
        monkeypatch.setenv('LSFTS_BENCH_REPLICATES', '1')
        assert len(run_replicates('eigen-rate', small_manifest, seed=0)) == 2

    def test_unknown_name(self):
        with pytest.raises(UsageError):
            run_replicates('no-such-experiment')

    def test_invalid_replicates(self, small_manifest):
        with pytest.raises(UsageError):
            run_replicates('eigen-rate', small_manifest, replicates=0)


@pytest.mark.slow
class TestAcceptance:
    def test_eigenvalue_rate(self):
        table = run_experiment('eigen-rate', seed=0)
        assert -0.5 <= table['slope'].iloc[0] <= -0.15

    def test_mean_rate(self):
        table = run_experiment('mean-rate', seed=0)
        assert table['median_sq_error'].iloc[-1] < table['median_sq_error'].iloc[0]

    def test_clt(self):
        row = run_experiment('clt', seed=0).iloc[0]
        assert row['ks_distance'] < 0.06
        assert 0.85 <= row['variance'] <= 1.15

    def test_longrun_consistency(self):
        medians = run_experiment('longrun-consistency', seed=0)['median_ise'].to_numpy()
        assert np.all(np.diff(medians) < 0)

    def test_two_sample_size(self):
        rate = run_experiment('two-sample-size', seed=0)['rejection_rate'].iloc[0]
        assert 0.025 <= rate <= 0.085

    def test_two_sample_power(self):
        assert run_experiment('two-sample-power', seed=0)['rejection_rate'].iloc[0] >= 0.9

    def test_q_selector(self):
        assert run_experiment('q-selector', seed=0)['hit_rate'].iloc[0] >= 0.95

    def test_prediction(self):
        table = run_experiment('prediction', seed=0)
        assert np.all(np.diff(table['median_error'].to_numpy()) < 0)
