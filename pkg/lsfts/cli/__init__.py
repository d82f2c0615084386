from .io import read_series, write_series, write_curves, write_kernel, write_eigensystem, write_json, write_table
from .app import build_parser, run, EXIT_OK, EXIT_USAGE, EXIT_DATA

__all__ = [
    'read_series', 'write_series', 'write_curves', 'write_kernel', 'write_eigensystem', 'write_json',
    'write_table', 'build_parser', 'run', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_DATA',
]
