"""Direct-summation Fourier transforms on small grids.

Convention: f_hat(xi) = integral of exp(i xi.x) f(x) dx. Transforms are
computed as weighted sums over a quadrature grid (composite Gauss-Legendre
by default), which is exact to rounding for smooth, rapidly decaying f.
Functions with power-law tails outside the sampled window can describe
those tails through ``AlgebraicTail``; the tail contribution is then
added with the Fourier quadrature rule.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np
from numpy.typing import NDArray

from fracwalk.numerics.grids import FloatArray, Grid1D, GridD, as_points
from fracwalk.numerics.quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_tail
from fracwalk.utils.errors import GridExtentWarning, ShapeMismatchError

logger = logging.getLogger(__name__)

ComplexArray = NDArray[np.complex128]

# Samples are processed in chunks so the phase matrix stays small.
_CHUNK = 4096


class Sampleable(Protocol):
    """Anything that can be evaluated on points of R^d and has a window."""

    @property
    def dimension(self) -> int: ...

    @property
    def center(self) -> tuple[float, ...]: ...

    def support_radius(self) -> float: ...

    def evaluate(self, points: FloatArray) -> FloatArray: ...


@dataclass(frozen=True)
class SampledFunction:
    """Values of a function of one variable on a quadrature grid."""

    grid: Grid1D
    values: FloatArray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != self.grid.points.shape:
            raise ShapeMismatchError(
                "sampled values must align with the grid",
                {"grid": self.grid.points.shape, "values": values.shape},
            )
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class AlgebraicTail:
    """Power-law behaviour of a sampled function outside its window.

    For z = x - center with |z| >= start the function is taken to be
    sum_k c_k |z|^(-p_k), with separate (c_k, p_k) lists per side.
    """

    center: float
    start: float
    right: tuple[tuple[float, float], ...] = field(default_factory=tuple)
    left: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def _side(
        self, terms: tuple[tuple[float, float], ...], xi: float, spec: QuadratureSpec
    ) -> complex:
        """Integral of exp(i xi z) sum_k c_k z^-p_k over [start, infinity)."""
        if not terms:
            return 0j

        def amplitude(z: float) -> float:
            return sum(c * z ** (-p) for c, p in terms)

        if xi == 0.0:
            return complex(
                sum(c * self.start ** (1.0 - p) / (p - 1.0) for c, p in terms)
            )
        omega = abs(xi)
        cos_part = integrate_tail(
            amplitude, self.start, spec, weight="cos", frequency=omega
        )
        sin_part = integrate_tail(
            amplitude, self.start, spec, weight="sin", frequency=omega
        )
        return complex(cos_part.value, math.copysign(1.0, xi) * sin_part.value)

    def transform(self, xi: float, spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
        """Fourier transform of the tail pieces at frequency xi."""
        right = self._side(self.right, xi, spec)
        # The left side is the right side at -xi after z -> -z.
        left = self._side(self.left, -xi, spec)
        phase = complex(math.cos(xi * self.center), math.sin(xi * self.center))
        return phase * (right + left)


def _frequencies(xi_grid: Grid1D | GridD) -> FloatArray:
    return as_points(xi_grid)


def _weighted_sum(
    points: FloatArray, weighted: FloatArray, xi: FloatArray
) -> ComplexArray:
    """sum_j weighted_j * exp(i xi . x_j) for every xi row."""
    out = np.zeros(xi.shape[0], dtype=np.complex128)
    for start in range(0, points.shape[0], _CHUNK):
        block = points[start : start + _CHUNK]
        phase = block @ xi.T
        out += np.exp(1j * phase).T @ weighted[start : start + _CHUNK]
    return out


def _tensor_grid(f: Sampleable) -> tuple[FloatArray, FloatArray, FloatArray]:
    """Tensor Gauss-Legendre grid over the function's window.

    Returns:
        Tuple (points, weights, boundary mask).
    """
    radius = f.support_radius()
    d = f.dimension
    order = 16 if d == 1 else 12
    panels = max(8, math.ceil(2.0 * radius)) if d == 1 else max(4, math.ceil(radius))
    axes = [
        Grid1D.gauss_legendre(c - radius, c + radius, panels, order) for c in f.center
    ]
    mesh = np.meshgrid(*[axis.points for axis in axes], indexing="ij")
    weight_mesh = np.meshgrid(*[axis.weights for axis in axes], indexing="ij")
    points = np.column_stack([m.ravel() for m in mesh])
    weights = np.prod(np.column_stack([w.ravel() for w in weight_mesh]), axis=1)
    boundary = np.zeros(points.shape[0], dtype=bool)
    for k, axis in enumerate(axes):
        lo, hi = axis.extent
        boundary |= (points[:, k] == lo) | (points[:, k] == hi)
    return points, weights, boundary


def _check_extent(values: FloatArray, edge: FloatArray, tolerance: float) -> None:
    scale = float(np.max(np.abs(values))) if values.size else 0.0
    edge_value = float(np.max(np.abs(edge))) if edge.size else 0.0
    if scale > 0 and edge_value > tolerance * scale:
        message = (
            f"grid truncates the function: edge value {edge_value:.3g} "
            f"exceeds {tolerance:g} of its maximum {scale:.3g}"
        )
        logger.warning(message)
        warnings.warn(message, GridExtentWarning, stacklevel=3)


def fourier_transform(
    f: Sampleable | SampledFunction,
    xi_grid: Grid1D | GridD,
    *,
    tail: AlgebraicTail | None = None,
    tolerance: float = 1e-8,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> ComplexArray:
    """Fourier transform of f on a frequency grid by direct summation.

    Args:
        f: A closed-form function (evaluated on a tensor Gauss-Legendre grid
            over its window) or values already sampled on a 1-d grid.
        xi_grid: Frequencies.
        tail: Power-law continuation of a 1-d sampled function outside its
            grid.
        tolerance: Relative edge value above which a GridExtentWarning is
            issued.
        spec: Tolerances for the tail quadrature.

    Returns:
        Complex transform values, one per frequency.

    Raises:
        ShapeMismatchError: If the function and grid dimensions disagree.
    """
    xi = _frequencies(xi_grid)
    if isinstance(f, SampledFunction):
        if xi.shape[1] != 1:
            raise ShapeMismatchError("sampled functions are one-dimensional")
        points = f.grid.points[:, None]
        values = f.values
        weighted = f.grid.weights * values
        if tail is None:
            _check_extent(values, values[[0, -1]], tolerance)
    else:
        if xi.shape[1] != f.dimension:
            raise ShapeMismatchError(
                "frequency grid and function dimension disagree",
                {"grid": xi.shape[1], "function": f.dimension},
            )
        points, weights, boundary = _tensor_grid(f)
        values = f.evaluate(points)
        weighted = weights * values
        _check_extent(values, values[boundary], tolerance)

    result = _weighted_sum(points, weighted, xi)
    if tail is not None:
        result += np.array([tail.transform(float(k), spec) for k in xi[:, 0]])
    return result


__all__ = [
    "AlgebraicTail",
    "ComplexArray",
    "Sampleable",
    "SampledFunction",
    "fourier_transform",
]
