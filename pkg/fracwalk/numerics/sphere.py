"""Quadrature on the unit sphere S^{d-1} for d <= 3."""

from __future__ import annotations

import math

import numpy as np

from fracwalk.numerics.grids import FloatArray
from fracwalk.numerics.quadrature import DEFAULT_SPEC, QuadratureSpec, quad_estimate
from fracwalk.numerics.special import sphere_area
from fracwalk.utils.errors import DomainError

MAX_DIMENSION = 3


def check_dimension(d: int) -> None:
    """Raise DomainError unless 1 <= d <= MAX_DIMENSION."""
    if not 1 <= d <= MAX_DIMENSION:
        raise DomainError(
            f"dimension must lie in 1..{MAX_DIMENSION}, got {d}", {"d": d}
        )


def sphere_rule(d: int, n: int = 64) -> tuple[FloatArray, FloatArray]:
    """Nodes and weights integrating functions over S^{d-1}.

    d=1 is the two-point sphere {-1, +1} with unit weights; d=2 uses the
    midpoint trapezoid rule in the angle (spectrally accurate for periodic
    integrands); d=3 uses Gauss-Legendre in cos(theta) times the trapezoid
    rule in the azimuth with 2n nodes.

    Args:
        d: Dimension of the ambient space.
        n: Resolution parameter.

    Returns:
        Tuple (nodes of shape (m, d), weights of shape (m,)); weights sum to
        the surface measure of S^{d-1}.
    """
    check_dimension(d)
    if d == 1:
        return np.array([[1.0], [-1.0]]), np.array([1.0, 1.0])
    if d == 2:
        theta = 2.0 * math.pi * (np.arange(n) + 0.5) / n
        nodes = np.column_stack([np.cos(theta), np.sin(theta)])
        return nodes, np.full(n, 2.0 * math.pi / n)

    t, t_weights = np.polynomial.legendre.leggauss(n)
    phi = 2.0 * math.pi * (np.arange(2 * n) + 0.5) / (2 * n)
    ring = np.sqrt(1.0 - t * t)
    nodes = np.column_stack(
        [
            np.outer(ring, np.cos(phi)).ravel(),
            np.outer(ring, np.sin(phi)).ravel(),
            np.repeat(t, phi.size),
        ]
    )
    weights = np.outer(t_weights, np.full(phi.size, math.pi / n)).ravel()
    return nodes, weights


def angular_moment(
    beta: float, d: int, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Integrate |omega_1|^beta over the unit sphere S^{d-1}.

    For d >= 2 the zonal integrand reduces to
    |S^{d-2}| * 2 * int_0^1 t^beta (1 - t^2)^((d-3)/2) dt, evaluated with
    the algebraic-weight rule so both endpoint singularities are exact.
    """
    check_dimension(d)
    if d == 1:
        return 2.0
    exponent = (d - 3) / 2.0
    radial = quad_estimate(
        lambda t: (1.0 + t) ** exponent,
        0.0,
        1.0,
        spec,
        weight="alg",
        wvar=(beta, exponent),
    )
    return sphere_area(d - 1) * 2.0 * radial.value


__all__ = ["MAX_DIMENSION", "angular_moment", "check_dimension", "sphere_rule"]
