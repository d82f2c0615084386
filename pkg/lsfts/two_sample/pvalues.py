import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from lsfts.exceptions import DegeneratePValueWarning, LsftsError, NumericError
from lsfts.two_sample.config import TwoSampleConfig

logger = logging.getLogger(__name__)

# draws per block; blocks get their own spawned seed so the estimate does not
# depend on how blocks are spread over workers
MC_BLOCK_SIZE = 10_000
MIN_DRAWS = 1_000


def _exceedances(weights: np.ndarray, observed: float, draws: int, seed_sequence: np.random.SeedSequence) -> int:
    rng = np.random.default_rng(seed_sequence)
    normals = rng.standard_normal((draws, weights.size))
    return int(np.count_nonzero((normals ** 2) @ weights >= observed))


def pvalue_weighted_chisq(weights, observed: float, n_mc: Optional[int] = None, seed: Optional[int] = None) -> float:
    """
    Monte Carlo upper tail of sum_j w_j N_j^2 at `observed`

    Args:
        weights: Nonnegative weights w_j
        observed: Observed statistic
        n_mc: Number of draws, at least 1000
        seed: Seed for the draws; deterministic given the seed

    Returns:
        float: Fraction of draws at or above `observed`
    """
    config = TwoSampleConfig()
    n_mc = config.n_mc if n_mc is None else int(n_mc)
    seed = config.settings.seed if seed is None else seed
    weights = np.asarray(weights, dtype=float).ravel()
    if n_mc < MIN_DRAWS:
        raise LsftsError(f"need at least {MIN_DRAWS} Monte Carlo draws, got {n_mc}")
    if weights.size == 0 or np.any(weights < 0) or not np.all(np.isfinite(weights)):
        raise NumericError("weights must be a nonempty list of finite nonnegative numbers")
    if observed <= 0:
        return 1.0
    if not np.any(weights > 0):
        warnings.warn("all weights are zero but the statistic is positive; p-value set to 0",
                      DegeneratePValueWarning, stacklevel=2)
        return 0.0

    blocks = math.ceil(n_mc / MC_BLOCK_SIZE)
    sizes = [MC_BLOCK_SIZE] * (blocks - 1) + [n_mc - MC_BLOCK_SIZE * (blocks - 1)]
    children = np.random.SeedSequence(seed).spawn(blocks)
    workers = min(config.settings.threads, blocks)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        counts = list(executor.map(lambda args: _exceedances(weights, observed, *args), zip(sizes, children)))
    p_value = sum(counts) / n_mc
    logger.debug(f"weighted chi-square p-value {p_value:.5f} from {n_mc} draws in {blocks} blocks")
    return p_value
