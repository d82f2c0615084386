import os
from typing import Callable, TypeVar

import psutil

from lsfts.exceptions import ConfigError

V = TypeVar('V')


def _default_threads() -> int:
    cores = psutil.cpu_count(logical=False)
    return cores if cores else 1


def env_value(name: str, cast: Callable[[str], V], default: V) -> V:
    """Environment variable `name` parsed with `cast`, or `default` when unset or empty."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return cast(raw)
    except ValueError:
        raise ConfigError(f"{name}={raw!r} is not a valid {cast.__name__}")


class Settings:
    def __init__(self):
        self.threads = max(1, env_value('LSFTS_THREADS', int, _default_threads()))
        self.log_level = env_value('LSFTS_LOG_LEVEL', str, 'WARNING').upper()
        self.h_constant = env_value('LSFTS_H_CONSTANT', float, 1.0)
        self.seed = env_value('LSFTS_SEED', int, 20240101)
