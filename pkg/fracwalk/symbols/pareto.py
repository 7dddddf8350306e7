"""Truncated Pareto integrals behind the Theorem 1 and 2 symbols.

After y = s / |xi| both integrals reduce to a universal shape:

    integral_gamma^inf (1 - cos xi y) y^(-alpha-1) dy
        = |xi|^alpha * integral_a^inf (1 - cos s) s^(-alpha-1) ds,
    integral_gamma^inf sin(xi y) y^(-alpha-1) dy
        = sgn(xi) |xi|^alpha * integral_a^inf sin(s) s^(-alpha-1) ds,

with a = |xi| gamma. The panel [a, R] (R = max(a, 50)) is integrated in
log coordinates s = a e^u, so a may be many decades below one; the tail
past R uses the closed form of the power and the Fourier rule.
"""

from __future__ import annotations

import math

from fracwalk.numerics.quadrature import (
    DEFAULT_SPEC,
    Estimate,
    QuadratureSpec,
    fourier_cutoff,
    integrate_log_interval,
    integrate_tail,
)


def _cut(a: float) -> float:
    # s = |xi| y, so the cutoff is taken at unit frequency.
    return max(a, fourier_cutoff(1.0))


def unit_cosine_tail(a: float, alpha: float, spec: QuadratureSpec) -> Estimate:
    """Integral over [a, inf) of (1 - cos s) s^(-alpha-1), a > 0."""
    cut = _cut(a)
    head = integrate_log_interval(
        lambda s: 2.0 * math.sin(0.5 * s) ** 2 * s ** (-alpha - 1.0), a, cut, spec
    )
    oscillating = integrate_tail(
        lambda s: s ** (-alpha - 1.0), cut, spec, weight="cos", frequency=1.0
    )
    return head + Estimate(cut ** (-alpha) / alpha, 0.0) + oscillating.scaled(-1.0)


def unit_sine_tail(a: float, alpha: float, spec: QuadratureSpec) -> Estimate:
    """Integral over [a, inf) of sin(s) s^(-alpha-1), a > 0."""
    cut = _cut(a)
    head = integrate_log_interval(
        lambda s: math.sin(s) * s ** (-alpha - 1.0), a, cut, spec
    )
    oscillating = integrate_tail(
        lambda s: s ** (-alpha - 1.0), cut, spec, weight="sin", frequency=1.0
    )
    return head + oscillating


def pareto_cosine_integral(
    xi: float, alpha: float, gamma: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Integral over [gamma, inf) of (1 - cos xi y) y^(-alpha-1); 0 at xi = 0."""
    if xi == 0.0:
        return 0.0
    omega = abs(xi)
    return omega**alpha * unit_cosine_tail(omega * gamma, alpha, spec).value


def pareto_sine_integral(
    xi: float, alpha: float, gamma: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Integral over [gamma, inf) of sin(xi y) y^(-alpha-1); odd in xi."""
    if xi == 0.0:
        return 0.0
    omega = abs(xi)
    value = omega**alpha * unit_sine_tail(omega * gamma, alpha, spec).value
    return value if xi > 0 else -value


__all__ = [
    "pareto_cosine_integral",
    "pareto_sine_integral",
    "unit_cosine_tail",
    "unit_sine_tail",
]
