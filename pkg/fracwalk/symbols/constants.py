"""Integral constants of the symmetric and isotropic limit symbols.

C(alpha) = 1/2 * integral over R of (1 - cos y) |y|^(-alpha-1) dy, and its
d-dimensional analogue C_d(alpha) = integral over R^d of
(1 - cos y_1) |y|^(-2 alpha - d) dy, which factors into C(2 alpha) times the
angular moment of |omega_1|^(2 alpha) over the unit sphere.
"""

from __future__ import annotations

import logging
import math
from typing import Literal

from fracwalk.numerics.quadrature import (
    DEFAULT_SPEC,
    FarField,
    QuadratureSpec,
    integrate_singular_symmetric,
    integrate_tail,
    quad_estimate,
)
from fracwalk.numerics.special import gamma_fn
from fracwalk.numerics.sphere import angular_moment, check_dimension
from fracwalk.utils.errors import DomainError

logger = logging.getLogger(__name__)

C1Scheme = Literal["split", "parts"]


def _check_alpha(alpha: float, upper: float) -> None:
    if not 0.0 < alpha < upper:
        raise DomainError(f"alpha must lie in (0, {upper:g}), got {alpha}")


def _c1_split(alpha: float, spec: QuadratureSpec) -> float:
    """Second-difference route: 1 - cos y = 2 sin^2(y/2), far field 1 - cos y."""
    estimate = integrate_singular_symmetric(
        lambda y: 2.0 * math.sin(0.5 * y) ** 2,
        alpha,
        spec,
        far_field=FarField(constant=1.0, cosine=-1.0, frequency=1.0),
    )
    return 0.5 * estimate.value


def _c1_parts(alpha: float, spec: QuadratureSpec) -> float:
    """Integration by parts: C = (1/alpha) * integral of sin(y) y^(-alpha)."""

    def sinc(y: float) -> float:
        return math.sin(y) / y if y > 0 else 1.0

    core = quad_estimate(sinc, 0.0, 1.0, spec, weight="alg", wvar=(1.0 - alpha, 0.0))
    tail = integrate_tail(
        lambda y: y ** (-alpha), 1.0, spec, weight="sin", frequency=1.0
    )
    return (core.value + tail.value) / alpha


def constant_C1(
    alpha: float, scheme: C1Scheme = "split", spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """The constant C of the symmetric limit symbol alpha * lam * C * |xi|^alpha.

    Args:
        alpha: Index in (0, 2).
        scheme: "split" integrates the second difference with a QAWS core and
            a Fourier-rule tail; "parts" integrates sin(y) y^(-alpha) after
            integration by parts. The two share no integrand.
        spec: Tolerances.

    Returns:
        C(alpha) > 0.

    Raises:
        DomainError: If alpha is outside (0, 2).
        QuadratureError: If a panel fails to converge.
    """
    _check_alpha(alpha, 2.0)
    match scheme:
        case "split":
            return _c1_split(alpha, spec)
        case "parts":
            return _c1_parts(alpha, spec)
    raise DomainError(f"unknown quadrature scheme: {scheme}")


def constant_C1_closed_form(alpha: float) -> float:
    """Gamma(1 - alpha) cos(pi alpha / 2) / alpha, pi/2 at alpha = 1.

    Proven for alpha in (0, 1); the same expression continues analytically
    to (1, 2), where it serves only as a cross-check.
    """
    _check_alpha(alpha, 2.0)
    if alpha == 1.0:
        return math.pi / 2.0
    return gamma_fn(1.0 - alpha) * math.cos(math.pi * alpha / 2.0) / alpha


def constant_Cd(alpha: float, d: int, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """C_d(alpha) = C(2 alpha) * integral over S^{d-1} of |omega_1|^(2 alpha).

    Args:
        alpha: Index in (0, 1).
        d: Dimension, 1 <= d <= 3.
        spec: Tolerances.

    Returns:
        C_d(alpha) > 0; for d = 1 this is 2 C(2 alpha).
    """
    _check_alpha(alpha, 1.0)
    check_dimension(d)
    value = constant_C1(2.0 * alpha, spec=spec) * angular_moment(2.0 * alpha, d, spec)
    logger.debug("C_d(alpha=%s, d=%d) = %.12g", alpha, d, value)
    return value


def constant_Cd_closed_form(alpha: float, d: int) -> float:
    """pi^(d/2) Gamma(1 - alpha) / (alpha 4^alpha Gamma(alpha + d/2))."""
    _check_alpha(alpha, 1.0)
    check_dimension(d)
    return (
        math.pi ** (d / 2.0)
        * gamma_fn(1.0 - alpha)
        / (alpha * 4.0**alpha * gamma_fn(alpha + d / 2.0))
    )


__all__ = [
    "C1Scheme",
    "constant_C1",
    "constant_C1_closed_form",
    "constant_Cd",
    "constant_Cd_closed_form",
]
