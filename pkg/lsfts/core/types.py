from dataclasses import dataclass

import numpy as np

from lsfts.core.grid import Grid, _frozen
from lsfts.exceptions import NumericError, ShapeError

_SYMMETRY_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class FunctionalSeries:
    """
    T curves sampled on a common grid, row t holding X_{t,T}

    Args:
        values: T x n matrix of curve values
        grid: Grid the curves live on
    """
    values: np.ndarray
    grid: Grid

    def __post_init__(self):
        values = _frozen(self.values)
        if values.ndim != 2 or values.shape[1] != self.grid.n:
            raise ShapeError(f"series values have shape {values.shape}, expected (T, {self.grid.n})")
        if values.shape[0] < 2:
            raise ShapeError(f"a series needs T >= 2 curves, got {values.shape[0]}")
        if not np.all(np.isfinite(values)):
            raise NumericError("series contains non-finite values")
        object.__setattr__(self, 'values', values)

    @property
    def T(self) -> int:
        return self.values.shape[0]

    def head(self, count: int) -> "FunctionalSeries":
        """First `count` curves as a new series."""
        return FunctionalSeries(self.values[:count], self.grid)


@dataclass(frozen=True, eq=False)
class LocalCovariance:
    """
    Discretized integral kernel c(s_i, s_j) tagged with its rescaled time and bandwidth

    Also used for lag autocovariance surfaces, which are not symmetric; those carry
    symmetric=False and skip the symmetry check.
    """
    kernel: np.ndarray
    grid: Grid
    u: float
    h: float
    symmetric: bool = True
    boundary: bool = False

    def __post_init__(self):
        kernel = _frozen(self.kernel)
        n = self.grid.n
        if kernel.shape != (n, n):
            raise ShapeError(f"kernel has shape {kernel.shape}, expected ({n}, {n})")
        if self.symmetric and np.all(np.isfinite(kernel)):
            scale = max(1.0, float(np.max(np.abs(kernel))))
            if np.max(np.abs(kernel - kernel.T)) > _SYMMETRY_RTOL * scale:
                raise NumericError("covariance kernel is not symmetric")
        object.__setattr__(self, 'kernel', kernel)

    @classmethod
    def zeros(cls, grid: Grid, u: float = 0.5, h: float = 1.0) -> "LocalCovariance":
        return cls(np.zeros((grid.n, grid.n)), grid, u, h)


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """
    Leading eigenpairs of a covariance operator

    Args:
        eigenvalues: Descending eigenvalues, length q
        eigenfunctions: q x n matrix, row j the quadrature-normalized eigenfunction j
        grid: Grid of the eigenfunctions
    """
    eigenvalues: np.ndarray
    eigenfunctions: np.ndarray
    grid: Grid

    def __post_init__(self):
        eigenvalues = _frozen(self.eigenvalues)
        eigenfunctions = _frozen(self.eigenfunctions)
        if eigenfunctions.shape != (eigenvalues.size, self.grid.n):
            raise ShapeError(
                f"eigenfunctions have shape {eigenfunctions.shape}, expected ({eigenvalues.size}, {self.grid.n})")
        object.__setattr__(self, 'eigenvalues', eigenvalues)
        object.__setattr__(self, 'eigenfunctions', eigenfunctions)

    @property
    def count(self) -> int:
        return self.eigenvalues.size

    def truncate(self, q: int) -> "EigenSystem":
        return EigenSystem(self.eigenvalues[:q], self.eigenfunctions[:q], self.grid)

    def scores(self, curve) -> np.ndarray:
        """FPC scores <curve, v_j> for every eigenfunction."""
        curve = np.asarray(curve, dtype=float)
        if curve.shape != (self.grid.n,):
            raise ShapeError(f"curve has shape {curve.shape}, expected ({self.grid.n},)")
        return self.eigenfunctions @ (self.grid.weights * curve)
