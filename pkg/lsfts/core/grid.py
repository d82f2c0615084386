from dataclasses import dataclass

import numpy as np

from lsfts.exceptions import InvalidGridError, ShapeError

# Lebesgue measure of D = [0, 1]
DOMAIN_MEASURE = 1.0
_UNIFORM_RTOL = 1e-8


def _frozen(array) -> np.ndarray:
    out = np.array(array, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Grid:
    """
    Discretization of D = [0, 1] with trapezoid quadrature weights

    Args:
        points: Strictly increasing sample locations
        weights: Positive quadrature weights summing to the measure of D
    """
    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        points = _frozen(self.points)
        weights = _frozen(self.weights)
        if points.ndim != 1 or weights.ndim != 1:
            raise InvalidGridError("grid points and weights must be one-dimensional")
        if points.shape != weights.shape:
            raise InvalidGridError(f"{points.size} points but {weights.size} weights")
        if points.size < 2:
            raise InvalidGridError(f"a grid needs at least 2 points, got {points.size}")
        if not np.all(np.isfinite(points)) or not np.all(np.diff(points) > 0):
            raise InvalidGridError("grid points must be finite and strictly increasing")
        if not np.all(weights > 0):
            raise InvalidGridError("quadrature weights must be positive")
        if abs(weights.sum() - DOMAIN_MEASURE) > 1e-12:
            raise InvalidGridError(f"quadrature weights sum to {weights.sum()!r}, expected {DOMAIN_MEASURE}")
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'weights', weights)

    @property
    def n(self) -> int:
        return self.points.size

    def same_as(self, other: "Grid") -> bool:
        return self is other or (self.n == other.n and np.array_equal(self.points, other.points))


def make_uniform_grid(n: int, d: int = 1) -> Grid:
    """
    Equispaced grid on [0, 1] with trapezoid weights

    Args:
        n: Number of points, at least 2
        d: Dimension of D; only 1 is supported

    Returns:
        Grid: Points i/(n-1) with weights delta/2 at the ends and delta inside
    """
    if d != 1:
        raise InvalidGridError(f"only d=1 grids are supported, got d={d}")
    if n < 2:
        raise InvalidGridError(f"a grid needs at least 2 points, got n={n}")
    delta = 1.0 / (n - 1)
    weights = np.full(n, delta)
    weights[0] = weights[-1] = delta / 2
    return Grid(np.linspace(0.0, 1.0, n), weights)


def grid_from_points(points) -> Grid:
    """
    Rebuild a Grid from its sample locations, as read from a file header

    Only uniform grids spanning [0, 1] are accepted. The given points are kept
    verbatim so that a grid survives a write/read cycle bit for bit.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 1 or points.size < 2:
        raise InvalidGridError("a grid needs at least 2 points")
    if not np.all(np.isfinite(points)):
        raise InvalidGridError("grid points must be finite")
    gaps = np.diff(points)
    if not np.all(gaps > 0):
        bad = int(np.argmax(gaps <= 0)) + 1
        raise InvalidGridError(f"grid points must be strictly increasing (position {bad + 1})")
    if abs(points[0]) > 1e-9 or abs(points[-1] - DOMAIN_MEASURE) > 1e-9:
        raise InvalidGridError(f"grid must span [0, 1], got [{points[0]!r}, {points[-1]!r}]")
    if not np.allclose(gaps, gaps.mean(), rtol=_UNIFORM_RTOL, atol=0.0):
        raise InvalidGridError("non-uniform grids are not supported")
    # same weights as make_uniform_grid, bit for bit
    return Grid(points, make_uniform_grid(points.size).weights)


def _check_curve(f, grid: Grid, name: str) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape != (grid.n,):
        raise ShapeError(f"{name} has shape {f.shape}, expected ({grid.n},)")
    return f


def inner_product(f, g, grid: Grid) -> float:
    """Quadrature approximation of the L2 inner product, sum_i w_i f(s_i) g(s_i)."""
    f = _check_curve(f, grid, 'f')
    g = _check_curve(g, grid, 'g')
    return float(np.sum(grid.weights * f * g))


def l2_norm(f, grid: Grid) -> float:
    return float(np.sqrt(max(inner_product(f, f, grid), 0.0)))
