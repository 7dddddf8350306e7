"""Symbols of the skewed walk of Theorem 1 and of its subordinator limit.

The rescaled walk A(t / gamma^alpha) has E exp(i xi A) = exp(-t Phi_gamma(xi))
with

    Re Phi_gamma(xi) = lam alpha * int_gamma^inf (1 - cos xi y) y^(-alpha-1) dy,
    Im Phi_gamma(xi) = -lam alpha (p - q) * int_gamma^inf sin(xi y) y^(-alpha-1) dy,

and as gamma -> 0 the symbol tends to
lam Gamma(1 - alpha) (p (-i xi)^alpha + q (i xi)^alpha).
"""

from __future__ import annotations

import math

from fracwalk.middleware.validator import validate_skew
from fracwalk.numerics.quadrature import DEFAULT_SPEC, QuadratureSpec
from fracwalk.numerics.special import branch_power, gamma_fn
from fracwalk.symbols.pareto import pareto_cosine_integral, pareto_sine_integral
from fracwalk.utils.errors import DomainError


def pareto_symbol(
    xi: float,
    alpha: float,
    gamma: float,
    lam: float,
    p: float,
    q: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> complex:
    """Phi_gamma(xi) of the signed Pareto walk for any alpha > 0.

    The truncation at gamma keeps both integrals finite for every alpha, so
    this also serves the Theorem 2 range and the generator experiments.
    """
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    if xi == 0.0:
        return 0j
    real = lam * alpha * pareto_cosine_integral(xi, alpha, gamma, spec)
    if p == q:
        return complex(real, 0.0)
    imag = -lam * alpha * (p - q) * pareto_sine_integral(xi, alpha, gamma, spec)
    return complex(real, imag)


def symbol_thm1_pre(
    xi: float,
    alpha: float,
    gamma: float,
    lam: float,
    p: float,
    q: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> complex:
    """Pre-limit symbol Phi_gamma(xi) of Theorem 1.

    Args:
        xi: Frequency.
        alpha: Tail index in (0, 1).
        gamma: Smallest jump, > 0.
        lam: Poisson rate.
        p: Probability of a positive jump.
        q: Probability of a negative jump.
        spec: Tolerances.

    Returns:
        Complex symbol value; Phi(-xi) = conj(Phi(xi)).

    Raises:
        DomainError: If alpha is outside (0, 1) or gamma <= 0.
        QuadratureError: If a panel fails to converge.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"Theorem 1 needs alpha in (0, 1), got {alpha}")
    validate_skew(p, q)
    return pareto_symbol(xi, alpha, gamma, lam, p, q, spec)


def symbol_thm1_limit(
    xi: float, alpha: float, lam: float, p: float, q: float
) -> complex:
    """lam Gamma(1 - alpha) (p (-i xi)^alpha + q (i xi)^alpha)."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"Theorem 1 needs alpha in (0, 1), got {alpha}")
    validate_skew(p, q)
    scale = lam * gamma_fn(1.0 - alpha)
    if p == q:
        # The conjugate pair collapses to a real value.
        real = scale * math.cos(math.pi * alpha / 2.0) * abs(xi) ** alpha
        return complex(real, 0.0)
    return scale * (p * branch_power(xi, alpha, -1) + q * branch_power(xi, alpha, 1))


def subordinator_laplace(mu: float, alpha: float, t: float) -> float:
    """E exp(-mu S_t) = exp(-t mu^alpha) for the stable subordinator."""
    if mu < 0:
        raise DomainError(f"Laplace argument must be >= 0, got {mu}")
    return math.exp(-t * mu**alpha)


__all__ = [
    "pareto_symbol",
    "subordinator_laplace",
    "symbol_thm1_limit",
    "symbol_thm1_pre",
]
