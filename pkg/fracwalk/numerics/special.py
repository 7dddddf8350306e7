"""Special functions shared by the symbol, sampling and operator modules."""

from __future__ import annotations

import logging
import math

from scipy import special

from fracwalk.utils.errors import PoleError

logger = logging.getLogger(__name__)


def gamma_fn(x: float) -> float:
    """Evaluate the gamma function away from its poles.

    Args:
        x: Real argument, not a nonpositive integer.

    Returns:
        Gamma(x) in double precision.

    Raises:
        PoleError: If x is 0, -1, -2, ...

    Example:
        >>> gamma_fn(4.0)
        6.0
    """
    if x <= 0 and float(x).is_integer():
        raise PoleError(f"gamma function has a pole at x={x}", {"x": x})
    return float(special.gamma(x))


def reciprocal_gamma_fn(x: float) -> float:
    """Evaluate 1/Gamma(x), which is entire (zero at the poles of Gamma)."""
    return float(special.rgamma(x))


def sphere_area(d: int) -> float:
    """Surface measure of the unit sphere S^{d-1} in R^d (2 for d=1)."""
    return 2.0 * math.pi ** (d / 2.0) / gamma_fn(d / 2.0)


def branch_power(xi: float, alpha: float, sign: int) -> complex:
    """Evaluate (sign * i * xi)**alpha on the principal branch.

    The value is |xi|^alpha * exp(sign * i * pi * alpha / 2 * sgn(xi)) with
    sgn(0) = 0, so the result is continuous at the origin and equals 0 there.

    Args:
        xi: Real frequency.
        alpha: Exponent in (0, 2).
        sign: +1 for (i xi)^alpha, -1 for (-i xi)^alpha.

    Returns:
        Complex power on the stated branch.
    """
    if xi == 0.0:
        return 0j
    phase = sign * math.copysign(1.0, xi) * math.pi * alpha / 2.0
    magnitude = abs(xi) ** alpha
    return complex(magnitude * math.cos(phase), magnitude * math.sin(phase))


__all__ = ["gamma_fn", "reciprocal_gamma_fn", "sphere_area", "branch_power"]
