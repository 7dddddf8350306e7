"""Random variates for the jump laws.

Every sampler takes an explicit ``numpy.random.Generator`` and an optional
``size``; with ``size=None`` a scalar (or a single point in R^d) is drawn.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from fracwalk.numerics.grids import FloatArray
from fracwalk.utils.errors import DomainError

Size = int | tuple[int, ...] | None


def _require_positive(**params: float) -> None:
    for name, value in params.items():
        if not (math.isfinite(value) and value > 0):
            raise DomainError(f"{name} must be positive and finite, got {value}")


def sample_poisson(mean: float, rng: np.random.Generator, size: Size = None) -> Any:
    """Poisson(mean) counts.

    numpy's sampler is exact: multiplication/inversion for small means and
    Hormann's transformed rejection (PTRS) for means of 10 and above.

    Raises:
        DomainError: If mean is negative or not finite.
    """
    if not math.isfinite(mean) or mean < 0:
        raise DomainError(f"Poisson mean must be finite and >= 0, got {mean}")
    return rng.poisson(mean, size)


def sample_pareto_jump(
    alpha: float, gamma: float, rng: np.random.Generator, size: Size = None
) -> Any:
    """Pareto jumps Y = gamma * exp(X), X exponential with rate alpha.

    P{Y > y} = (gamma / y)^alpha for y >= gamma.
    """
    _require_positive(alpha=alpha, gamma=gamma)
    return gamma * np.exp(rng.exponential(1.0 / alpha, size))


def sample_rademacher(p: float, rng: np.random.Generator, size: Size = None) -> Any:
    """Signs: +1 with probability p, -1 otherwise."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"sign probability must lie in [0, 1], got {p}")
    signs = np.where(rng.random(size) < p, 1, -1)
    return int(signs) if size is None else signs


def sample_reciprocal_gamma(
    alpha: float, rng: np.random.Generator, size: Size = None
) -> Any:
    """E_alpha with 1 / E_alpha ~ Gamma(shape alpha, rate 1)."""
    _require_positive(alpha=alpha)
    return 1.0 / rng.gamma(alpha, 1.0, size)


def sample_student_jump(
    alpha: float,
    gamma: float,
    d: int,
    rng: np.random.Generator,
    size: int | None = None,
) -> FloatArray:
    """Student jumps in R^d: N(0, sigma^2 I_d) with sigma^2 = (gamma/2) E_alpha.

    Args:
        alpha: Shape of the reciprocal gamma variance.
        gamma: Variance scale.
        d: Dimension.
        rng: Generator.
        size: Number of jumps; None draws a single point.

    Returns:
        Array of shape (size, d), or (d,) when size is None.
    """
    _require_positive(alpha=alpha, gamma=gamma)
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    count = 1 if size is None else size
    variance = 0.5 * gamma * np.asarray(sample_reciprocal_gamma(alpha, rng, count))
    points = np.sqrt(variance)[:, None] * rng.standard_normal((count, d))
    return points[0] if size is None else points


__all__ = [
    "sample_pareto_jump",
    "sample_poisson",
    "sample_rademacher",
    "sample_reciprocal_gamma",
    "sample_student_jump",
]
