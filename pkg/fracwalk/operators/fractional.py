"""Weyl, Riesz and fractional Laplacian operators by singular quadrature.

Operators act on closed-form test functions and are evaluated pointwise.
With f_hat(xi) = integral of exp(i xi x) f(x) dx the multipliers are

    weyl_left        (-i xi)^beta
    weyl_right       (+i xi)^beta
    riesz_derivative |xi|^beta
    frac_laplacian   -|xi|^(2 alpha)        (returns -(-Laplacian)^alpha f)

Weyl derivatives of order beta in (0, 1) use the first-difference form

    (beta / Gamma(1 - beta)) int_0^inf (f(x) - f(x -/+ y)) y^(-beta-1) dy,

and of order beta in (1, 2) the Marchaud second-difference form

    (1 / kappa) int_0^inf (f(x) - 2 f(x -/+ y) + f(x -/+ 2y)) y^(-beta-1) dy,

kappa = Gamma(-beta) (2^beta - 2), which has the same multiplier.
"""

from __future__ import annotations

import logging
import math
from typing import Literal

import numpy as np

from fracwalk.numerics.grids import FloatArray
from fracwalk.numerics.quadrature import (
    CURVATURE_FLOOR,
    DEFAULT_SPEC,
    Estimate,
    FarField,
    QuadratureSpec,
    integrate_singular_symmetric,
    integrate_tail,
    quad_estimate,
)
from fracwalk.numerics.special import gamma_fn
from fracwalk.numerics.sphere import check_dimension, sphere_rule
from fracwalk.operators.functions import TestFunction
from fracwalk.symbols.constants import constant_Cd
from fracwalk.utils.errors import DivergenceError, DomainError

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]

# First differences keep full relative precision down to this scale.
FIRST_DIFFERENCE_FLOOR = 1.0e-7

# Sphere rule resolution per dimension for the polar fractional Laplacian.
_SPHERE_NODES = {2: 128, 3: 64}


def _require_one_dimensional(f: TestFunction) -> None:
    if f.dimension != 1:
        raise DomainError(
            f"operator is one-dimensional, function has d={f.dimension}"
        )


def _point(x: float | FloatArray, d: int) -> FloatArray:
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if point.size != d:
        raise DomainError(f"point has {point.size} coordinates, expected d={d}")
    return point


# =============================================================================
# Shifted Tails
# =============================================================================


def _shifted_tail(
    f: TestFunction, x: float, step: float, order: float, spec: QuadratureSpec
) -> Estimate:
    """Integral of f(x + step * y) y^(-order-1) over [1, infinity)."""
    power = -order - 1.0
    z = x - f.center[0]
    if f.family == "cosine":
        # cos(k z + k step y) = cos(k z) cos(k|step| y) - sgn(step) sin(k z) sin(...)
        k = f.frequency
        omega = k * abs(step)
        cos_part = integrate_tail(
            lambda y: y**power, 1.0, spec, weight="cos", frequency=omega
        )
        sin_part = integrate_tail(
            lambda y: y**power, 1.0, spec, weight="sin", frequency=omega
        )
        sign = math.copysign(1.0, step)
        return cos_part.scaled(math.cos(k * z)) + sin_part.scaled(
            -sign * math.sin(k * z)
        )

    # The bump of f sits at y = -z / step.
    radius = f.support_radius()
    peak = -z / step
    spread = radius / abs(step)
    breakpoints = [p for p in (peak - spread, peak, peak + spread) if p > 1.0]
    return integrate_tail(
        lambda y: f.value(x + step * y) * y**power,
        1.0,
        spec,
        breakpoints=breakpoints,
    )


def _check_growth(f: TestFunction, operator: str) -> None:
    if f.growth_order > 0:
        raise DivergenceError(
            f"{operator} of a function growing like |x|^{f.growth_order} diverges",
            {"family": f.family},
        )


# =============================================================================
# Weyl Derivatives
# =============================================================================


def marchaud_constant(beta: float) -> float:
    """kappa = Gamma(-beta) (2^beta - 2), positive for beta in (1, 2)."""
    return gamma_fn(-beta) * (2.0**beta - 2.0)


def weyl_estimate(
    f: TestFunction,
    order: float,
    x: float,
    side: Side,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Estimate:
    """Weyl derivative of order in (0, 1) or (1, 2) with its error bound.

    Args:
        f: One-dimensional test function.
        order: Derivative order beta.
        x: Evaluation point.
        side: "left" integrates over the past f(x - y), "right" over f(x + y).
        spec: Tolerances.

    Returns:
        Estimate of the derivative.

    Raises:
        DomainError: If the order is outside (0, 2) or equal to 1.
        DivergenceError: If f grows at infinity.
    """
    if not 0.0 < order < 2.0 or order == 1.0:
        raise DomainError(f"Weyl order must lie in (0, 1) or (1, 2), got {order}")
    _require_one_dimensional(f)
    if f.family == "constant" or (f.family == "cosine" and f.frequency == 0.0):
        return Estimate(0.0, 0.0)
    _check_growth(f, "Weyl derivative")

    step = -1.0 if side == "left" else 1.0
    fx = f.value(x)
    if order < 1.0:

        def first(y: float) -> float:
            y = max(y, FIRST_DIFFERENCE_FLOOR)
            return (fx - f.value(x + step * y)) / y

        core = quad_estimate(first, 0.0, 1.0, spec, weight="alg", wvar=(-order, 0.0))
        tail = Estimate(fx / order, 0.0) + _shifted_tail(
            f, x, step, order, spec
        ).scaled(-1.0)
        return (core + tail).scaled(order / gamma_fn(1.0 - order))

    def second(y: float) -> float:
        y = max(y, CURVATURE_FLOOR)
        difference = fx - 2.0 * f.value(x + step * y) + f.value(x + 2.0 * step * y)
        return difference / (y * y)

    core = quad_estimate(second, 0.0, 1.0, spec, weight="alg", wvar=(1.0 - order, 0.0))
    near = _shifted_tail(f, x, step, order, spec).scaled(-2.0)
    far = _shifted_tail(f, x, 2.0 * step, order, spec)
    tail = Estimate(fx / order, 0.0) + near + far
    return (core + tail).scaled(1.0 / marchaud_constant(order))


def weyl_left(
    f: TestFunction, alpha: float, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Left Weyl derivative, multiplier (-i xi)^alpha."""
    return weyl_estimate(f, alpha, x, "left", spec).value


def weyl_right(
    f: TestFunction, alpha: float, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Right Weyl derivative, multiplier (i xi)^alpha."""
    return weyl_estimate(f, alpha, x, "right", spec).value


# =============================================================================
# Riesz Derivative
# =============================================================================


def riesz_factor(beta: float) -> float:
    """sigma / 2 with sigma = 1 / cos(pi beta / 2).

    Raises:
        DomainError: At beta = 1, where sigma is undefined.
    """
    if not 0.0 < beta < 2.0:
        raise DomainError(f"Riesz order must lie in (0, 2), got {beta}")
    if beta == 1.0:
        raise DomainError(
            "Riesz derivative is singular at beta = 1 (cos(pi/2) = 0)",
            {"beta": beta},
        )
    return 0.5 / math.cos(0.5 * math.pi * beta)


def riesz_estimate(
    f: TestFunction, beta: float, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> Estimate:
    factor = riesz_factor(beta)
    left = weyl_estimate(f, beta, x, "left", spec)
    right = weyl_estimate(f, beta, x, "right", spec)
    return (left + right).scaled(factor)


def riesz_derivative(
    f: TestFunction, beta: float, x: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """(sigma / 2) (left + right Weyl derivatives), multiplier |xi|^beta.

    The sign matches (-Laplacian)^(beta/2), so riesz_derivative(f, 2 a, x)
    equals -frac_laplacian(f, a, x), whose multiplier is -|xi|^(2 a).
    """
    return riesz_estimate(f, beta, x, spec).value


# =============================================================================
# Fractional Laplacian
# =============================================================================


def _laplacian_breakpoints(f: TestFunction, distance: float) -> list[float]:
    if not f.is_decaying:
        return []
    radius = f.support_radius()
    return [p for p in (distance - radius, distance, distance + radius) if p > 1.0]


def frac_laplacian_estimate(
    f: TestFunction,
    alpha: float,
    x: float | FloatArray,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Estimate:
    """-(-Laplacian)^alpha f(x) by the second-difference singular integral.

    The integral (C/2) int (f(x+y) + f(x-y) - 2 f(x)) |y|^(-2 alpha - d) dy
    with C = 1 / constant_Cd(alpha, d) is evaluated directly for d = 1 and
    in polar form for d >= 2, averaging over a sphere rule at each radius.

    Raises:
        DomainError: If alpha is outside (0, 1) or the family is not
            supported in this dimension.
        DivergenceError: If f grows quadratically or the second difference
            fails its O(|y|^2) probe.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"fractional Laplacian needs alpha in (0, 1), got {alpha}")
    d = f.dimension
    check_dimension(d)
    point = _point(x, d)
    # Second differences of affine functions vanish.
    if f.family in ("constant", "linear") or (
        f.family == "cosine" and f.frequency == 0.0
    ):
        return Estimate(0.0, 0.0)
    if f.growth_order > 1:
        _check_growth(f, "fractional Laplacian")

    normalization = 1.0 / constant_Cd(alpha, d, spec)
    fx = f.value(point if d > 1 else float(point[0]))
    distance = float(np.linalg.norm(point - np.asarray(f.center)))

    if d == 1:
        x0 = float(point[0])

        def second(y: float) -> float:
            return f.value(x0 + y) + f.value(x0 - y) - 2.0 * fx

        if f.family == "cosine":
            k = f.frequency
            level = math.cos(k * (x0 - f.center[0]))
            far = FarField(constant=-2.0 * level, cosine=2.0 * level, frequency=k)
        else:
            far = FarField(constant=-2.0 * fx)
        integral = integrate_singular_symmetric(
            second,
            2.0 * alpha,
            spec,
            far_field=far,
            breakpoints=_laplacian_breakpoints(f, distance),
        )
        return integral.scaled(0.5 * normalization)

    if f.family == "cosine":
        raise DomainError("the cosine family is supported for d = 1 only")
    nodes, weights = sphere_rule(d, _SPHERE_NODES[d])
    total_weight = float(weights.sum())

    def spherical(r: float) -> float:
        plus = f.evaluate(point + r * nodes)
        minus = f.evaluate(point - r * nodes)
        return float(weights @ (plus + minus)) - 2.0 * total_weight * fx

    # Radial form: int_0^inf A(r) r^(-2 alpha - 1) dr is half the symmetric one.
    integral = integrate_singular_symmetric(
        spherical,
        2.0 * alpha,
        spec,
        far_field=FarField(constant=-2.0 * total_weight * fx),
        breakpoints=_laplacian_breakpoints(f, distance),
    )
    return integral.scaled(0.25 * normalization)


def frac_laplacian(
    f: TestFunction,
    alpha: float,
    x: float | FloatArray,
    d: int | None = None,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """-(-Laplacian)^alpha f at x in R^d.

    Args:
        f: Test function on R^d.
        alpha: Index in (0, 1); the multiplier is -|xi|^(2 alpha).
        x: Evaluation point (a scalar for d = 1).
        d: Expected dimension; defaults to the function's.
        spec: Tolerances.

    Returns:
        Value of the generator at x.
    """
    if d is not None and d != f.dimension:
        raise DomainError(f"function has d={f.dimension}, operator asked for d={d}")
    return frac_laplacian_estimate(f, alpha, x, spec).value


__all__ = [
    "FIRST_DIFFERENCE_FLOOR",
    "Side",
    "frac_laplacian",
    "frac_laplacian_estimate",
    "marchaud_constant",
    "riesz_derivative",
    "riesz_estimate",
    "riesz_factor",
    "weyl_estimate",
    "weyl_left",
    "weyl_right",
]
