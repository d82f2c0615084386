import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import pandas as pd
import psutil

from lsfts.bench.config import BenchConfig
from lsfts.bench.experiments import EXPERIMENTS
from lsfts.bench.manifest import Manifest, load_manifest
from lsfts.exceptions import UsageError
from lsfts.simulate import spawn_seeds

logger = logging.getLogger(__name__)


def _resident_mb() -> float:
    return psutil.Process().memory_info().rss / 1024 ** 2


def replicate_seeds(seed: int, T_values: List[int], replicates: int) -> List[Tuple[int, int, int]]:
    """
    (T, replicate index, seed) for every task of an experiment

    Each T gets its own child of the root seed and each replicate a child of that,
    so a task's seed depends only on its position in the manifest.
    """
    tasks = []
    for T, T_seed in zip(T_values, spawn_seeds(seed, len(T_values))):
        for index, task_seed in enumerate(spawn_seeds(T_seed, replicates)):
            tasks.append((int(T), index, task_seed))
    return tasks


def run_replicates(name: str, manifest: Optional[Manifest] = None, replicates: Optional[int] = None,
                   seed: Optional[int] = None, threads: Optional[int] = None) -> pd.DataFrame:
    """
    Run every replicate of an experiment and return one row per replicate

    Args:
        name: Experiment name from the manifest
        manifest: Manifest to read parameters from; the packaged one when omitted
        replicates: Overrides the manifest and LSFTS_BENCH_REPLICATES
        seed: Root seed; LSFTS_SEED when omitted
        threads: Worker count; LSFTS_THREADS when omitted

    Returns:
        pd.DataFrame: Columns T, replicate and the experiment's record fields, in task order
    """
    if name not in EXPERIMENTS:
        raise UsageError(f"unknown experiment {name!r}; known: {', '.join(sorted(EXPERIMENTS))}")
    manifest = manifest or load_manifest(known=EXPERIMENTS)
    params = manifest.params(name)
    experiment = EXPERIMENTS[name]
    config = BenchConfig()

    if not experiment.replicated:
        replicates = 1
    elif replicates is None:
        replicates = config.replicates or int(params.get('replicates', 1))
    if replicates < 1:
        raise UsageError(f"replicates must be positive, got {replicates}")
    seed = config.settings.seed if seed is None else int(seed)
    threads = threads or config.settings.threads

    tasks = replicate_seeds(seed, params['T'], replicates)
    logger.info(f"bench {name}: {len(tasks)} tasks on {threads} threads, seed={seed}, "
                f"resident memory {_resident_mb():.1f} MB")
    started = time.monotonic()

    def run_task(task):
        T, index, task_seed = task
        return {'T': T, 'replicate': index, **experiment.replicate(params, T, task_seed)}

    with ThreadPoolExecutor(max_workers=threads) as executor:
        records = list(executor.map(run_task, tasks))

    logger.info(f"bench {name}: finished in {time.monotonic() - started:.1f}s, "
                f"resident memory {_resident_mb():.1f} MB")
    return pd.DataFrame.from_records(records)


def run_experiment(name: str, manifest: Optional[Manifest] = None, replicates: Optional[int] = None,
                   seed: Optional[int] = None, threads: Optional[int] = None) -> pd.DataFrame:
    """Run an experiment and return its summary table."""
    manifest = manifest or load_manifest(known=EXPERIMENTS)
    frame = run_replicates(name, manifest, replicates, seed, threads)
    return EXPERIMENTS[name].summarize(manifest.params(name), frame)
