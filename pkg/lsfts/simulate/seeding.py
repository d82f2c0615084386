from typing import List

import numpy as np


def spawn_seeds(seed: int, count: int) -> List[int]:
    """
    Derive `count` independent integer seeds from one root seed

    Child i is the i-th child of numpy's SeedSequence(seed), so replicate i receives the
    same seed whether replicates run serially or on any number of workers.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def component_generators(seed: int, count: int) -> List[np.random.Generator]:
    """One independent generator per basis component."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]
