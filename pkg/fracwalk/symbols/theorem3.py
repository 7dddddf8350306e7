"""Symbols of the isotropic Student walk of Theorem 3.

With rate lam / gamma^alpha and the Student density, the rescaled walk has
symbol

    Phi_gamma(xi) = lam K_d * integral over R^d of (1 - cos xi.y)
                    (|y|^2 + gamma)^(-alpha - d/2) dy.

Integrating out the d - 1 directions orthogonal to xi leaves the 1-d form
lam K_1 * 2 * integral_0^inf (1 - cos rho s) (s^2 + gamma)^(-alpha-1/2) ds,
rho = |xi|, which is what the quadrature path evaluates. The Bessel form
(lam / gamma^alpha) (1 - 2 u^(alpha/2) K_alpha(2 sqrt u) / Gamma(alpha)),
u = gamma rho^2 / 4, is kept as an independent oracle.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from fracwalk.numerics.grids import FloatArray
from fracwalk.numerics.quadrature import (
    DEFAULT_SPEC,
    Estimate,
    QuadratureSpec,
    fourier_cutoff,
    integrate_interval,
    integrate_log_interval,
    integrate_tail,
)
from fracwalk.numerics.special import gamma_fn
from fracwalk.numerics.sphere import check_dimension
from fracwalk.symbols.constants import constant_Cd
from fracwalk.symbols.student import student_kernel_constant
from fracwalk.utils.errors import DomainError


def _check(alpha: float, d: int) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"Theorem 3 needs alpha in (0, 1), got {alpha}")
    check_dimension(d)


def _radius(xi: float | FloatArray) -> float:
    return float(np.linalg.norm(np.atleast_1d(np.asarray(xi, dtype=np.float64))))


def _projected_integral(
    rho: float, alpha: float, gamma: float, spec: QuadratureSpec
) -> Estimate:
    """Integral over [0, inf) of (1 - cos rho s) (s^2 + gamma)^(-alpha - 1/2)."""
    power = alpha + 0.5
    knee = math.sqrt(gamma)
    cut = max(fourier_cutoff(rho), 10.0 * knee)

    def kernel(s: float) -> float:
        return (s * s + gamma) ** (-power)

    def integrand(s: float) -> float:
        return 2.0 * math.sin(0.5 * rho * s) ** 2 * kernel(s)

    core = integrate_interval(integrand, 0.0, knee, spec)
    middle = integrate_log_interval(integrand, knee, cut, spec)
    # Past the cut: kernel minus its leading power decays two orders faster.
    leading = Estimate(cut ** (1.0 - 2.0 * power) / (2.0 * power - 1.0), 0.0)
    correction = integrate_tail(lambda s: kernel(s) - s ** (-2.0 * power), cut, spec)
    oscillating = integrate_tail(kernel, cut, spec, weight="cos", frequency=rho)
    return core + middle + leading + correction + oscillating.scaled(-1.0)


def symbol_thm3_pre(
    xi: float | FloatArray,
    alpha: float,
    gamma: float,
    lam: float,
    d: int,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Pre-limit symbol Phi_gamma(xi) of Theorem 3 by 1-d quadrature.

    Args:
        xi: Frequency in R^d (a scalar for d = 1).
        alpha: Index in (0, 1).
        gamma: Variance scale, > 0.
        lam: Poisson rate.
        d: Dimension, 1 <= d <= 3.
        spec: Tolerances.

    Returns:
        Real, radial, nonnegative symbol value.
    """
    _check(alpha, d)
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    rho = _radius(xi)
    if rho == 0.0:
        return 0.0
    integral = _projected_integral(rho, alpha, gamma, spec)
    return lam * student_kernel_constant(alpha, 1) * 2.0 * integral.value


def student_characteristic_function(
    xi: float | FloatArray, alpha: float, gamma: float
) -> float:
    """E exp(i xi.Y) = 2 u^(alpha/2) K_alpha(2 sqrt u) / Gamma(alpha).

    u = gamma |xi|^2 / 4; the value is 1 at xi = 0.
    """
    rho = _radius(xi)
    u = 0.25 * gamma * rho * rho
    if u == 0.0:
        return 1.0
    bessel = float(special.kv(alpha, 2.0 * math.sqrt(u)))
    return 2.0 * u ** (alpha / 2.0) * bessel / gamma_fn(alpha)


def symbol_thm3_closed_form(
    xi: float | FloatArray, alpha: float, gamma: float, lam: float
) -> float:
    """(lam / gamma^alpha) (1 - E exp(i xi.Y)) in Bessel form."""
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    decay = student_characteristic_function(xi, alpha, gamma)
    return lam / gamma**alpha * (1.0 - decay)


def symbol_thm3_limit(
    xi: float | FloatArray,
    alpha: float,
    lam: float,
    d: int,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    cd: float | None = None,
) -> float:
    """lam K_d C_d(alpha) |xi|^(2 alpha).

    ``cd`` lets grid evaluations reuse one quadrature of C_d(alpha).
    """
    _check(alpha, d)
    rho = _radius(xi)
    if rho == 0.0:
        return 0.0
    constant = constant_Cd(alpha, d, spec) if cd is None else cd
    return lam * student_kernel_constant(alpha, d) * constant * rho ** (2.0 * alpha)


__all__ = [
    "student_characteristic_function",
    "symbol_thm3_closed_form",
    "symbol_thm3_limit",
    "symbol_thm3_pre",
]
