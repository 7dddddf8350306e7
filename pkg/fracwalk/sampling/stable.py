"""Exact samplers for the stable limit laws.

- Positive stable (subordinator) marginals via Kanter's representation:
  with U uniform on (0, pi) and E ~ Exp(1),
  S = sin(a U) / sin(U)^(1/a) * (sin((1-a) U) / E)^((1-a)/a)
  has Laplace transform exp(-mu^a).
- Symmetric stable marginals via the Chambers-Mallows-Stuck construction
  with U uniform on (-pi/2, pi/2), characteristic function exp(-|xi|^b).
- Isotropic stable vectors as Gaussian vectors subordinated by a positive
  stable variable of index b/2: X = sqrt(2 S) G has
  E exp(i xi.X) = E exp(-S |xi|^2) = exp(-t |xi|^b).
"""

from __future__ import annotations

import math

import numpy as np

from fracwalk.middleware.validator import validate_skew
from fracwalk.numerics.grids import FloatArray
from fracwalk.numerics.special import gamma_fn
from fracwalk.utils.errors import DomainError


def _check_index(name: str, value: float, upper: float) -> None:
    if not 0.0 < value < upper:
        raise DomainError(f"{name} must lie in (0, {upper:g}), got {value}")


def _standard_positive_stable(
    alpha: float, rng: np.random.Generator, size: int
) -> FloatArray:
    """Positive stable draws with Laplace transform exp(-mu^alpha)."""
    u = math.pi * (1.0 - rng.random(size))
    e = rng.standard_exponential(size)
    head = np.sin(alpha * u) / np.sin(u) ** (1.0 / alpha)
    body = (np.sin((1.0 - alpha) * u) / e) ** ((1.0 - alpha) / alpha)
    return head * body


def sample_stable_subordinator(
    alpha: float, t: float, rng: np.random.Generator, size: int | None = None
) -> FloatArray | float:
    """Marginal of the stable subordinator at time t.

    Args:
        alpha: Index in (0, 1).
        t: Time, > 0.
        rng: Generator.
        size: Number of draws; None for a scalar.

    Returns:
        Positive draws with E exp(-mu S) = exp(-t mu^alpha).
    """
    _check_index("alpha", alpha, 1.0)
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")
    count = 1 if size is None else size
    draws = t ** (1.0 / alpha) * _standard_positive_stable(alpha, rng, count)
    return float(draws[0]) if size is None else draws


def thm1_time_map(alpha: float, lam: float, t: float) -> float:
    """t* = lam * Gamma(1 - alpha) * t."""
    return lam * gamma_fn(1.0 - alpha) * t


def sample_limit_thm1(
    alpha: float,
    p: float,
    q: float,
    lam: float,
    t: float,
    rng: np.random.Generator,
    size: int | None = None,
) -> FloatArray | float:
    """Difference of independent subordinators H1(p t*) - H2(q t*).

    A zero time contributes exactly zero, so p = 1 gives positive draws and
    p = 0 negative ones. Both subordinators are always drawn so the stream
    position does not depend on p.
    """
    _check_index("alpha", alpha, 1.0)
    validate_skew(p, q)
    count = 1 if size is None else size
    t_star = thm1_time_map(alpha, lam, t)
    up = (p * t_star) ** (1.0 / alpha) * _standard_positive_stable(alpha, rng, count)
    down = (q * t_star) ** (1.0 / alpha) * _standard_positive_stable(alpha, rng, count)
    draws = up - down
    return float(draws[0]) if size is None else draws


def sample_symmetric_stable(
    beta: float, t_star: float, rng: np.random.Generator, size: int | None = None
) -> FloatArray | float:
    """Symmetric stable draws with characteristic function exp(-t* |xi|^beta)."""
    _check_index("beta", beta, 2.0)
    if not t_star > 0:
        raise DomainError(f"time must be positive, got {t_star}")
    count = 1 if size is None else size
    u = math.pi * (rng.random(count) - 0.5)
    w = rng.standard_exponential(count)
    if beta == 1.0:
        x = np.tan(u)
    else:
        head = np.sin(beta * u) / np.cos(u) ** (1.0 / beta)
        x = head * (np.cos((1.0 - beta) * u) / w) ** ((1.0 - beta) / beta)
    draws = t_star ** (1.0 / beta) * x
    return float(draws[0]) if size is None else draws


def sample_isotropic_stable(
    beta: float,
    t_star: float,
    d: int,
    rng: np.random.Generator,
    size: int | None = None,
) -> FloatArray:
    """Isotropic stable vectors in R^d with CF exp(-t* |xi|^beta).

    Returns:
        Array of shape (size, d), or (d,) when size is None.
    """
    _check_index("beta", beta, 2.0)
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    count = 1 if size is None else size
    clock = np.asarray(sample_stable_subordinator(beta / 2.0, t_star, rng, count))
    points = np.sqrt(2.0 * clock)[:, None] * rng.standard_normal((count, d))
    return points[0] if size is None else points


__all__ = [
    "sample_isotropic_stable",
    "sample_limit_thm1",
    "sample_stable_subordinator",
    "sample_symmetric_stable",
    "thm1_time_map",
]
