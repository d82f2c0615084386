import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Optional, Union

from lsfts.exceptions import DataError, UsageError

MANIFEST_VERSION = '1.0'


@dataclass(frozen=True)
class Manifest:
    """Versioned set of experiment declarations, keyed by experiment name."""
    version: str
    experiments: Dict[str, dict] = field(default_factory=dict)

    def params(self, name: str) -> dict:
        if name not in self.experiments:
            raise UsageError(f"unknown experiment {name!r}; known: {', '.join(sorted(self.experiments))}")
        return dict(self.experiments[name])


def _major(version: str) -> str:
    return str(version).split('.')[0]


def parse_manifest(payload: dict, known=None) -> Manifest:
    """
    Validate a manifest payload

    Args:
        payload: Decoded JSON with `version` and `experiments`
        known: Experiment names the runner can execute; unchecked when None

    Returns:
        Manifest: The validated manifest
    """
    if not isinstance(payload, dict) or 'experiments' not in payload:
        raise DataError("manifest needs an 'experiments' object")
    version = str(payload.get('version', ''))
    if _major(version) != _major(MANIFEST_VERSION):
        raise DataError(f"manifest version {version!r} is not compatible with {MANIFEST_VERSION}")
    experiments = payload['experiments']
    for name, params in experiments.items():
        if known is not None and name not in known:
            raise DataError(f"manifest declares unknown experiment {name!r}")
        if not isinstance(params, dict) or not params.get('T'):
            raise DataError(f"experiment {name!r} needs a non-empty 'T' list")
    return Manifest(version, dict(experiments))


def load_manifest(path: Optional[Union[str, Path]] = None, known=None) -> Manifest:
    """Read a manifest file, or the one shipped with the package when path is None."""
    try:
        if path is None:
            text = resources.files('lsfts.bench').joinpath('experiments.json').read_text()
        else:
            text = Path(path).read_text()
    except OSError as e:
        raise DataError(f"cannot read manifest: {e}") from e
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DataError(f"manifest is not valid JSON: {e.msg}", line=e.lineno) from e
    return parse_manifest(payload, known)
