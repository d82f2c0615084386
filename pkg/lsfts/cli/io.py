"""
File formats of the command line

Curves are CSV: a header row with the grid points, then one row per time point.
Matrices use the same header with one row per grid point. Results are JSON.

CSV floats are written at 17 significant digits. JSON floats keep the shortest
repr that reads back to the same double, so both formats round-trip exactly.
"""

import json
import re
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from lsfts.core import EigenSystem, FunctionalSeries, Grid, LocalCovariance, grid_from_points
from lsfts.exceptions import DataError, InvalidGridError, LsftsError

PathLike = Union[str, Path]

FLOAT_FORMAT = '%.17g'

_PANDAS_LINE = re.compile(r'line (\d+)')


def _format(value: float) -> str:
    return FLOAT_FORMAT % value


def _as_floats(cells: pd.Series, line: int) -> np.ndarray:
    try:
        # float() on the text is correctly rounded, so 17-digit output reads back exactly
        return np.array([float(cell) for cell in cells], dtype=float)
    except (TypeError, ValueError):
        pass
    for cell in cells:
        try:
            float(cell)
        except (TypeError, ValueError):
            raise DataError(f"non-numeric cell {cell!r}", line=line)
    raise DataError("unreadable row", line=line)


def _read_table(path: PathLike) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path, header=None, dtype=str, keep_default_na=False, skip_blank_lines=False)
    except pd.errors.EmptyDataError:
        raise DataError(f"{path} is empty")
    except pd.errors.ParserError as e:
        match = _PANDAS_LINE.search(str(e))
        raise DataError(f"ragged row in {path}", line=int(match.group(1)) if match else None) from e
    except OSError as e:
        raise DataError(f"cannot read {path}: {e}") from e
    return frame


def _grid_from_header(header: pd.Series) -> Grid:
    points = _as_floats(header, line=1)
    try:
        return grid_from_points(points)
    except InvalidGridError as e:
        raise DataError(str(e), line=1) from e


def read_series(path: PathLike) -> FunctionalSeries:
    """
    Read curves from CSV

    Args:
        path: File with a header row of grid points and one curve per following row

    Returns:
        FunctionalSeries: The curves in file order

    Raises:
        DataError: Ragged rows, empty cells, non-numeric cells or a bad grid row, with the
            offending line number
    """
    frame = _read_table(path)
    grid = _grid_from_header(frame.iloc[0])
    if len(frame) < 2:
        raise DataError(f"{path} holds a grid row but no curves")
    rows = []
    for offset in range(1, len(frame)):
        line = offset + 1
        cells = frame.iloc[offset]
        missing = cells.isna() | (cells == '')
        if missing.any():
            raise DataError(f"row has {int((~missing).sum())} values, expected {grid.n}", line=line)
        rows.append(_as_floats(cells, line))
    try:
        return FunctionalSeries(np.vstack(rows), grid)
    except LsftsError as e:
        raise DataError(str(e)) from e


@contextmanager
def _target(path: Optional[PathLike]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', newline='') as handle:
            yield handle


def _write_frame(frame: pd.DataFrame, path: Optional[PathLike]):
    with _target(path) as handle:
        frame.to_csv(handle, index=False, float_format=FLOAT_FORMAT, na_rep='nan', lineterminator='\n')


def _grid_header(grid: Grid):
    return [_format(point) for point in grid.points]


def write_series(series: FunctionalSeries, path: Optional[PathLike] = None):
    """Write curves as CSV at 17 significant digits; standard output when path is None."""
    _write_frame(pd.DataFrame(series.values, columns=_grid_header(series.grid)), path)


def write_curves(values: np.ndarray, grid: Grid, path: Optional[PathLike] = None):
    """Rows of curves on a grid, with the same header as write_series."""
    _write_frame(pd.DataFrame(np.atleast_2d(values), columns=_grid_header(grid)), path)


def write_kernel(cov: LocalCovariance, path: Optional[PathLike] = None):
    """n x n kernel matrix under a grid header."""
    _write_frame(pd.DataFrame(cov.kernel, columns=_grid_header(cov.grid)), path)


def eigen_tables(eigen: EigenSystem):
    """Eigenvalue table (j, eigenvalue) and eigenfunction table (s, v_1..v_q)."""
    eigenvalues = pd.DataFrame({'j': np.arange(1, eigen.count + 1), 'eigenvalue': eigen.eigenvalues})
    eigenfunctions = pd.DataFrame({'s': eigen.grid.points})
    for j in range(eigen.count):
        eigenfunctions[f'v_{j + 1}'] = eigen.eigenfunctions[j]
    return eigenvalues, eigenfunctions


def write_eigensystem(eigen: EigenSystem, prefix: Optional[str] = None):
    """PREFIX_eigenvalues.csv and PREFIX_eigenfunctions.csv, or both tables on standard output."""
    eigenvalues, eigenfunctions = eigen_tables(eigen)
    if prefix is None:
        _write_frame(eigenvalues, None)
        sys.stdout.write('\n')
        _write_frame(eigenfunctions, None)
        return
    _write_frame(eigenvalues, f'{prefix}_eigenvalues.csv')
    _write_frame(eigenfunctions, f'{prefix}_eigenfunctions.csv')


def write_table(frame: pd.DataFrame, path: Optional[PathLike] = None):
    _write_frame(frame, path)


def write_json(payload: dict, path: Optional[PathLike] = None):
    """Indented JSON with sorted keys; floats as repr, which json.loads restores bit for bit."""
    with _target(path) as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write('\n')
