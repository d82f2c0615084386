from .config import BenchConfig
from .manifest import MANIFEST_VERSION, Manifest, load_manifest, parse_manifest
from .experiments import EXPERIMENTS, Experiment
from .runner import replicate_seeds, run_replicates, run_experiment

__all__ = [
    'BenchConfig', 'MANIFEST_VERSION', 'Manifest', 'load_manifest', 'parse_manifest',
    'EXPERIMENTS', 'Experiment', 'replicate_seeds', 'run_replicates', 'run_experiment',
]
