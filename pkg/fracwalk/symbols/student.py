"""The Student jump density and its tail order."""

from __future__ import annotations

import math

import numpy as np

from fracwalk.numerics.grids import FloatArray
from fracwalk.numerics.quadrature import (
    DEFAULT_SPEC,
    QuadratureSpec,
    integrate_interval,
)
from fracwalk.numerics.special import gamma_fn
from fracwalk.utils.errors import DomainError


def student_kernel_constant(alpha: float, d: int) -> float:
    """K = Gamma(alpha + d/2) / (pi^(d/2) Gamma(alpha))."""
    return gamma_fn(alpha + d / 2.0) / (math.pi ** (d / 2.0) * gamma_fn(alpha))


def student_density(y: float | FloatArray, alpha: float, gamma: float, d: int) -> float:
    """K gamma^alpha / (|y|^2 + gamma)^(alpha + d/2) at a point y of R^d.

    Args:
        y: Point in R^d (a scalar is accepted for d = 1).
        alpha: Shape, > 0.
        gamma: Scale, > 0.
        d: Dimension.

    Returns:
        Density value.
    """
    if alpha <= 0 or gamma <= 0:
        raise DomainError(f"alpha and gamma must be positive, got {alpha}, {gamma}")
    point = np.atleast_1d(np.asarray(y, dtype=np.float64))
    if point.size != d:
        raise DomainError(f"point has {point.size} coordinates, expected d={d}")
    radius2 = float(point @ point)
    constant = student_kernel_constant(alpha, d)
    return constant * gamma**alpha / (radius2 + gamma) ** (alpha + d / 2.0)


def student_cdf(
    y: float | FloatArray,
    alpha: float,
    gamma: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> FloatArray:
    """CDF of the one-dimensional Student jump by quadrature of its density.

    Points are sorted by modulus and the density is integrated panel by panel
    from the origin outwards, F(y) = 1/2 + sgn(y) * integral over [0, |y|].

    Returns:
        CDF values aligned with ``y``.
    """
    values = np.atleast_1d(np.asarray(y, dtype=np.float64))
    moduli = np.abs(values)
    order = np.argsort(moduli, kind="stable")
    constant = student_kernel_constant(alpha, 1) * gamma**alpha
    power = alpha + 0.5
    scale = math.sqrt(gamma)

    def density(s: float) -> float:
        return constant / (s * s + gamma) ** power

    mass = np.empty_like(moduli)
    running = 0.0
    previous = 0.0
    for index in order:
        upper = float(moduli[index])
        if upper > previous:
            breakpoints = [scale] if previous < scale < upper else []
            running += integrate_interval(
                density, previous, upper, spec, breakpoints=breakpoints
            ).value
            previous = upper
        mass[index] = running
    return 0.5 + np.sign(values) * mass


def tail_exponent_bound(alpha: float, gamma: float, x: float) -> float:
    """Order gamma^alpha x^(-2 alpha) of P{|Y| > x} for Student jumps.

    Only the order is asserted, not a constant.

    Raises:
        DomainError: If x < 10 sqrt(gamma), outside the asymptotic regime.
    """
    if x < 10.0 * math.sqrt(gamma):
        raise DomainError(
            f"tail bound needs x >= 10 * sqrt(gamma) = {10.0 * math.sqrt(gamma):g}",
            {"x": x, "gamma": gamma},
        )
    return gamma**alpha * x ** (-2.0 * alpha)


__all__ = [
    "student_cdf",
    "student_density",
    "student_kernel_constant",
    "tail_exponent_bound",
]
