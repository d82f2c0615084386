"""Subcommand handlers; each takes the parsed arguments and writes its output."""

import argparse
import logging
import sys

from lsfts.bench import EXPERIMENTS, load_manifest, run_experiment
from lsfts.cli.io import read_series, write_curves, write_eigensystem, write_json, write_kernel, write_series, \
    write_table
from lsfts.core import make_uniform_grid
from lsfts.exceptions import UsageError
from lsfts.kernels import BandwidthMode, default_bandwidth_h, lag_window_kernel, smoothing_kernel
from lsfts.local_covariance import local_cov, local_fpca
from lsfts.local_mean import mean_path
from lsfts.longrun import longrun_cov
from lsfts.prediction import predict_k_step
from lsfts.simulate import default_tvfar_config, load_sim_config, simulate_lsfts
from lsfts.two_sample import projected_tests

logger = logging.getLogger(__name__)


def _normalized(args: argparse.Namespace) -> bool:
    return args.weights == 'normalized'


def _bandwidth(args: argparse.Namespace, T: int, mode: BandwidthMode = BandwidthMode.ESTIMATION) -> float:
    if args.h is not None:
        return args.h
    h = default_bandwidth_h(T, mode, args.h_constant)
    logger.info(f"using default bandwidth h={h:.6g} for T={T}")
    return h


def simulate(args: argparse.Namespace):
    cfg = load_sim_config(args.config) if args.config else default_tvfar_config()
    seed = cfg.seed if args.seed is None else args.seed
    write_series(simulate_lsfts(cfg, args.T, make_uniform_grid(args.n), seed), args.out)


def estimate_mean(args: argparse.Namespace):
    X = read_series(args.input)
    path = mean_path(X, args.u, _bandwidth(args, X.T), smoothing_kernel(args.k1), _normalized(args))
    for index, message in path.errors.items():
        print(f"warning: u={path.u[index]}: {message}", file=sys.stderr)
    write_curves(path.values, X.grid, args.out)


def fpca(args: argparse.Namespace):
    X = read_series(args.input)
    cov = local_cov(X, args.u, _bandwidth(args, X.T), smoothing_kernel(args.k1), args.center, _normalized(args))
    write_eigensystem(local_fpca(cov, args.q), args.out)


def longrun(args: argparse.Namespace):
    X = read_series(args.input)
    cov = longrun_cov(X, args.u, _bandwidth(args, X.T), args.b, smoothing_kernel(args.k1), lag_window_kernel(args.k2))
    write_kernel(cov, args.out)


def predict(args: argparse.Namespace):
    X = read_series(args.input)
    if args.t1 is not None:
        if not 1 <= args.t1 <= X.T:
            raise UsageError(f"--t1 must lie in [1, {X.T}], got {args.t1}")
        X = X.head(args.t1)
    T = args.T if args.T is not None else X.T + args.k + 1
    predicted = predict_k_step(X, args.k, args.q, T=T, h=_bandwidth(args, T), kernel=smoothing_kernel(args.k1),
                               center=args.center, normalized=_normalized(args))
    write_curves(predicted, X.grid, args.out)


def two_sample(args: argparse.Namespace):
    X = read_series(args.input_x)
    Y = read_series(args.input_y)
    h = _bandwidth(args, min(X.T, Y.T), BandwidthMode.INFERENCE)
    result = projected_tests(X, Y, args.u, h, args.b, args.q, smoothing_kernel(args.k1), lag_window_kernel(args.k2),
                             eps0=args.eps0, n_mc=args.n_mc, seed=args.seed)
    write_json(result.to_dict(), args.out)


def bench(args: argparse.Namespace):
    manifest = load_manifest(args.manifest, known=EXPERIMENTS) if args.manifest else None
    table = run_experiment(args.experiment, manifest, args.replicates, args.seed)
    write_table(table, args.out)
