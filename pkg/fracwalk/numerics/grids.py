"""Evaluation grids in one and several dimensions.

A Grid1D carries quadrature weights alongside its points so that the same
object serves as a frequency grid (weights ignored) and as an integration
rule for direct-summation Fourier transforms. GridD holds frequency points
in R^d; for d > 1 it is built along rays rather than as a tensor product,
which keeps characteristic-function evaluations linear in the grid size.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from fracwalk.utils.errors import ShapeMismatchError

FloatArray = NDArray[np.float64]


@dataclass(frozen=True)
class Grid1D:
    """Strictly increasing points on the real line with quadrature weights.

    Attributes:
        points: Sample points, strictly increasing.
        weights: Quadrature weights aligned with ``points``.
        is_uniform: Whether the points are equally spaced.
    """

    points: FloatArray
    weights: FloatArray
    is_uniform: bool = False

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=np.float64)
        weights = np.asarray(self.weights, dtype=np.float64)
        if points.ndim != 1 or points.size == 0:
            raise ShapeMismatchError("grid points must be a nonempty 1-d array")
        if weights.shape != points.shape:
            raise ShapeMismatchError(
                "grid weights must align with points",
                {"points": points.shape, "weights": weights.shape},
            )
        if points.size > 1 and not np.all(np.diff(points) > 0):
            raise ShapeMismatchError("grid points must be strictly increasing")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, start: float, stop: float, num: int) -> Grid1D:
        """Equally spaced grid with trapezoid weights."""
        points = np.linspace(start, stop, num)
        if num == 1:
            return cls(points, np.zeros(1), is_uniform=True)
        step = (stop - start) / (num - 1)
        weights = np.full(num, step)
        weights[0] = weights[-1] = step / 2.0
        return cls(points, weights, is_uniform=True)

    @classmethod
    def gauss_legendre(
        cls, start: float, stop: float, panels: int, order: int = 16
    ) -> Grid1D:
        """Composite Gauss-Legendre rule with ``panels`` equal panels."""
        nodes, node_weights = np.polynomial.legendre.leggauss(order)
        edges = np.linspace(start, stop, panels + 1)
        half = np.diff(edges) / 2.0
        mid = (edges[:-1] + edges[1:]) / 2.0
        points = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
        weights = (half[:, None] * node_weights[None, :]).ravel()
        return cls(points, weights, is_uniform=False)

    @property
    def extent(self) -> tuple[float, float]:
        """First and last point."""
        return float(self.points[0]), float(self.points[-1])

    @property
    def spacing(self) -> float | None:
        """Step of a uniform grid, None otherwise."""
        if not self.is_uniform or self.points.size < 2:
            return None
        return float(self.points[1] - self.points[0])

    def __len__(self) -> int:
        return int(self.points.size)


@dataclass(frozen=True)
class GridD:
    """Frequency points in R^d.

    Attributes:
        points: Array of shape (m, d).
        radii: Signed radius of each point along its ray.
        directions: Unit direction of each point's ray, shape (m, d).
    """

    points: FloatArray
    radii: FloatArray = field(default_factory=lambda: np.zeros(0))
    directions: FloatArray = field(default_factory=lambda: np.zeros((0, 0)))

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=np.float64)
        if points.ndim != 2 or points.shape[0] == 0:
            raise ShapeMismatchError("GridD points must have shape (m, d), m >= 1")
        object.__setattr__(self, "points", points)

    @classmethod
    def along(cls, radial: Grid1D, direction: FloatArray) -> GridD:
        """Points radial * direction for a unit direction vector."""
        unit = np.asarray(direction, dtype=np.float64)
        unit = unit / np.linalg.norm(unit)
        points = radial.points[:, None] * unit[None, :]
        return cls(points, radial.points.copy(), np.tile(unit, (len(radial), 1)))

    @classmethod
    def axis(cls, radial: Grid1D, d: int, axis: int = 0) -> GridD:
        """Points along coordinate axis ``axis`` of R^d."""
        direction = np.zeros(d)
        direction[axis] = 1.0
        return cls.along(radial, direction)

    @property
    def dimension(self) -> int:
        return int(self.points.shape[1])

    @property
    def norms(self) -> FloatArray:
        """Euclidean norm of each point."""
        return np.linalg.norm(self.points, axis=1)

    def rotated(self, angle: float) -> GridD:
        """Rotate every point by ``angle`` in the (x1, x2) plane."""
        if self.dimension < 2:
            raise ShapeMismatchError("rotation needs d >= 2")
        rotation = np.eye(self.dimension)
        c, s = np.cos(angle), np.sin(angle)
        rotation[:2, :2] = [[c, -s], [s, c]]
        directions = self.directions @ rotation.T if self.directions.size else None
        return GridD(
            self.points @ rotation.T,
            self.radii.copy(),
            directions if directions is not None else np.zeros((0, 0)),
        )

    def __len__(self) -> int:
        return int(self.points.shape[0])


def as_points(grid: Grid1D | GridD) -> FloatArray:
    """Return grid points as an (m, d) array."""
    if isinstance(grid, GridD):
        return grid.points
    return grid.points[:, None]


def default_xi_grid(num: int = 101, extent: float = 5.0) -> Grid1D:
    """The default frequency grid: ``num`` uniform points on [-extent, extent]."""
    return Grid1D.uniform(-extent, extent, num)


__all__ = ["FloatArray", "Grid1D", "GridD", "as_points", "default_xi_grid"]
