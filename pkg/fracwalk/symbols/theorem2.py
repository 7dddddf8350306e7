"""Symbols of the symmetric walk of Theorem 2 (alpha in (0, 2))."""

from __future__ import annotations

from fracwalk.numerics.quadrature import DEFAULT_SPEC, QuadratureSpec
from fracwalk.symbols.constants import constant_C1
from fracwalk.symbols.pareto import pareto_cosine_integral
from fracwalk.utils.errors import DomainError


def _check(alpha: float) -> None:
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"Theorem 2 needs alpha in (0, 2), got {alpha}")


def symbol_thm2_pre(
    xi: float,
    alpha: float,
    gamma: float,
    lam: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """(alpha lam / 2) * integral over |y| > gamma of (1 - cos xi y) |y|^(-alpha-1).

    Nondecreasing as gamma decreases, since the integrand is nonnegative.
    """
    _check(alpha)
    if gamma <= 0:
        raise DomainError(f"gamma must be positive, got {gamma}")
    return lam * alpha * pareto_cosine_integral(xi, alpha, gamma, spec)


def symbol_thm2_limit(
    xi: float,
    alpha: float,
    lam: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    c1: float | None = None,
) -> float:
    """alpha lam C(alpha) |xi|^alpha.

    ``c1`` lets grid evaluations reuse one quadrature of C(alpha).
    """
    _check(alpha)
    if xi == 0.0:
        return 0.0
    constant = constant_C1(alpha, spec=spec) if c1 is None else c1
    return alpha * lam * constant * abs(xi) ** alpha


__all__ = ["symbol_thm2_limit", "symbol_thm2_pre"]
