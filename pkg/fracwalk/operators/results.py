"""Operator evaluation on grids and the Fourier multiplier check."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np
from scipy import special

from fracwalk.numerics.fourier import (
    AlgebraicTail,
    ComplexArray,
    SampledFunction,
    fourier_transform,
)
from fracwalk.numerics.grids import FloatArray, Grid1D, GridD, as_points
from fracwalk.numerics.quadrature import DEFAULT_SPEC, Estimate, QuadratureSpec
from fracwalk.numerics.special import branch_power, reciprocal_gamma_fn
from fracwalk.operators.fractional import (
    Side,
    frac_laplacian_estimate,
    riesz_estimate,
    riesz_factor,
    weyl_estimate,
)
from fracwalk.operators.functions import TestFunction
from fracwalk.operators.representations import (
    bochner_estimate,
    multiplier_estimate,
    power_multiplier,
)
from fracwalk.symbols.constants import constant_Cd
from fracwalk.utils.errors import DomainError, NumericalError, ShapeMismatchError

logger = logging.getLogger(__name__)

OperatorName = Literal[
    "weyl_left", "weyl_right", "riesz", "frac_laplacian", "bochner", "multiplier"
]

OPERATOR_NAMES: tuple[OperatorName, ...] = (
    "weyl_left",
    "weyl_right",
    "riesz",
    "frac_laplacian",
    "bochner",
    "multiplier",
)

# Generators of -(-Laplacian)^alpha; their order parameter is alpha.
LAPLACIAN_FORMS = ("frac_laplacian", "bochner", "multiplier")

# Window and rule used to sample an operator for the multiplier check.
CHECK_HALF_WIDTH = 16.0
CHECK_PANELS = 16
CHECK_NODES = 12


# =============================================================================
# Operator Result
# =============================================================================


@dataclass(frozen=True)
class OperatorResult:
    """Operator values on an evaluation grid.

    Attributes:
        grid: Evaluation points (Grid1D, or GridD for d > 1).
        values: Operator value at each point.
        errors: Quadrature error bound at each point.
        operator: Operator name.
        params: Parameter echo.
    """

    grid: Grid1D | GridD
    values: FloatArray
    errors: FloatArray
    operator: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        errors = np.asarray(self.errors, dtype=np.float64)
        if values.shape != (len(self.grid),) or errors.shape != values.shape:
            raise ShapeMismatchError(
                "operator values and errors must align with the grid",
                {"grid": len(self.grid), "values": values.shape},
            )
        if not np.all(np.isfinite(values)):
            raise NumericalError(f"{self.operator} produced non-finite values")
        if np.any(errors < 0):
            raise NumericalError("error estimates must be nonnegative")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "errors", errors)

    @property
    def points(self) -> FloatArray:
        return as_points(self.grid)

    def to_rows(self) -> FloatArray:
        return np.column_stack([self.points, self.values, self.errors])

    def header(self) -> list[str]:
        d = self.points.shape[1]
        names = ["x"] if d == 1 else [f"x{k + 1}" for k in range(d)]
        return [*names, "value", "error"]


def _evaluator(
    name: OperatorName, f: TestFunction, order: float, spec: QuadratureSpec
) -> Callable[[FloatArray], Estimate]:
    match name:
        case "weyl_left" | "weyl_right":
            side: Side = "left" if name == "weyl_left" else "right"
            return lambda p: weyl_estimate(f, order, float(p[0]), side, spec)
        case "riesz":
            return lambda p: riesz_estimate(f, order, float(p[0]), spec)
        case "frac_laplacian":
            return lambda p: frac_laplacian_estimate(f, order, p, spec)
        case "bochner":
            return lambda p: bochner_estimate(f, order, p, spec)
        case "multiplier":
            phi = power_multiplier(2.0 * order)
            return lambda p: multiplier_estimate(f, phi, p, spec)
    raise DomainError(f"unknown operator: {name}")


def evaluate_operator(
    name: OperatorName,
    f: TestFunction,
    grid: Grid1D | GridD,
    order: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> OperatorResult:
    """Evaluate one operator at every grid point.

    Args:
        name: Operator name; the Laplacian forms take alpha as ``order``,
            the Weyl and Riesz derivatives take their order beta.
        f: Test function.
        grid: Evaluation points matching f's dimension.
        order: Operator order.
        spec: Tolerances.

    Returns:
        OperatorResult with per-point error bounds.
    """
    points = as_points(grid)
    if points.shape[1] != f.dimension:
        raise ShapeMismatchError(
            "evaluation grid and function dimension disagree",
            {"grid": points.shape[1], "function": f.dimension},
        )
    evaluate = _evaluator(name, f, order, spec)
    logger.debug("Evaluating %s on %d points", name, len(points))
    estimates = [evaluate(p) for p in points]
    params = {"order": order, "function": f.model_dump(mode="json")}
    return OperatorResult(
        grid,
        np.array([e.value for e in estimates]),
        np.array([e.error for e in estimates]),
        name,
        params,
    )


# =============================================================================
# Multiplier Check
# =============================================================================


def operator_multiplier(name: OperatorName, order: float, xi: float) -> complex:
    """The Fourier multiplier m(xi) with (OP f)_hat = m f_hat."""
    match name:
        case "weyl_left":
            return branch_power(xi, order, -1)
        case "weyl_right":
            return branch_power(xi, order, 1)
        case "riesz":
            return complex(abs(xi) ** order)
    if name in LAPLACIAN_FORMS:
        return complex(-(abs(xi) ** (2.0 * order)))
    raise DomainError(f"unknown operator: {name}")


def _series(
    exponent: float, coefficient: float, moments: tuple[float, float, float]
) -> tuple[tuple[float, float], ...]:
    """coefficient * sum_k (exponent+1)_k / k! M_k |z|^(-exponent-1-k), k even."""
    terms: list[tuple[float, float]] = []
    for k, moment in zip((0, 2, 4), moments, strict=True):
        weight = float(special.poch(exponent + 1.0, k)) / math.factorial(k)
        terms.append((coefficient * weight * moment, exponent + 1.0 + k))
    return tuple(terms)


def operator_tail(
    name: OperatorName,
    f: TestFunction,
    order: float,
    start: float = CHECK_HALF_WIDTH,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> AlgebraicTail:
    """Power-law continuation of x -> OP(f)(x) beyond |x - center| = start.

    Far from the bump of f the singular integrals reduce to f's moments
    against a shifted power kernel, expanded in powers of 1/|z|.
    """
    moments = f.central_moments()
    center = f.center[0]
    if name in LAPLACIAN_FORMS:
        terms = _series(2.0 * order, 1.0 / constant_Cd(order, 1, spec), moments)
        return AlgebraicTail(center, start, right=terms, left=terms)
    one_sided = _series(order, reciprocal_gamma_fn(-order), moments)
    match name:
        case "weyl_left":
            return AlgebraicTail(center, start, right=one_sided)
        case "weyl_right":
            return AlgebraicTail(center, start, left=one_sided)
        case "riesz":
            factor = riesz_factor(order)
            both = tuple((factor * c, p) for c, p in one_sided)
            return AlgebraicTail(center, start, right=both, left=both)
    raise DomainError(f"unknown operator: {name}")


def operator_transform(
    name: OperatorName,
    f: TestFunction,
    order: float,
    xi_grid: Grid1D,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> ComplexArray:
    """Fourier transform of x -> OP(f)(x) sampled on a Gauss-Legendre window."""
    if f.dimension != 1:
        raise DomainError("the multiplier check is one-dimensional")
    center = f.center[0]
    window = Grid1D.gauss_legendre(
        center - CHECK_HALF_WIDTH, center + CHECK_HALF_WIDTH, CHECK_PANELS, CHECK_NODES
    )
    result = evaluate_operator(name, f, window, order, spec)
    sampled = SampledFunction(window, result.values)
    tail = operator_tail(name, f, order, CHECK_HALF_WIDTH, spec)
    return fourier_transform(sampled, xi_grid, tail=tail, spec=spec)


def multiplier_gap(
    name: OperatorName,
    f: TestFunction,
    order: float,
    xi_grid: Grid1D,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """sup over the grid of |(OP f)_hat(xi) - m(xi) f_hat(xi)|."""
    transform = operator_transform(name, f, order, xi_grid, spec)
    xi = xi_grid.points
    expected = np.array([operator_multiplier(name, order, float(s)) for s in xi])
    expected = expected * f.fourier(xi[:, None])
    gap = float(np.max(np.abs(transform - expected)))
    logger.info("Multiplier gap of %s (order %g): %.3g", name, order, gap)
    return gap


__all__ = [
    "LAPLACIAN_FORMS",
    "OPERATOR_NAMES",
    "OperatorName",
    "OperatorResult",
    "evaluate_operator",
    "multiplier_gap",
    "operator_multiplier",
    "operator_tail",
    "operator_transform",
]
