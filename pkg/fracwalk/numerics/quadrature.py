"""Adaptive quadrature for singular and oscillatory integrands.

All routines sit on top of QUADPACK through ``scipy.integrate.quad``:

- finite panels use the adaptive Gauss-Kronrod rule (QAGS), or the
  algebraic-weight rule (QAWS) when the lower endpoint carries a power
  singularity;
- semi-infinite tails use QAGI, or the Fourier rule (QAWF) when the
  integrand carries a cos/sin factor;
- Pareto-type panels [a, b] with a > 0 are mapped through y = a * e^u so
  that power tails become exponentials.

Every routine returns an ``Estimate`` (value, error bound). QUADPACK flags
roundoff on tight tolerances even when the answer is good, so a flagged
result is only rejected when its error bound exceeds the requested
tolerance by more than ``ROUNDOFF_SLACK``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from fracwalk.utils.errors import DivergenceError, DomainError, QuadratureError

logger = logging.getLogger(__name__)

ROUNDOFF_SLACK = 1.0e3

# Second differences lose relative precision below this scale; the core
# integrand g(y)/y^2 is frozen there.
CURVATURE_FLOOR = 1.0e-5

# Probe points for the O(y^2) check on second differences.
_PROBE_POINTS = (1.0e-1, 1.0e-2, 1.0e-3, 1.0e-4)

# Oscillatory symbol integrals keep [0, FOURIER_CUTOFF / |xi|] on the finite
# panel and hand the rest to the Fourier rule.
FOURIER_CUTOFF = 50.0

RealFunction = Callable[[float], float]
Weight = Literal["cos", "sin"]


class QuadratureSpec(BaseModel):
    """Tolerances and splitting parameters for one quadrature call.

    The singularity exponent s is the index of the kernel |y|^{-s-1}. A
    first difference tames it for s < 1; a second difference for s < 2.
    """

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=1e-10, gt=0, description="Absolute tolerance")
    rel_tol: float = Field(default=1e-8, gt=0, description="Relative tolerance")
    singularity_exponent: float = Field(
        default=0.0,
        ge=0,
        description="Kernel index s of |y|^(-s-1) at the origin",
    )
    truncation_radius: float = Field(
        default=1.0,
        gt=0,
        description=(
            "Length of the finite panel before the tail rule takes over; "
            "oscillatory symbol integrals use fourier_cutoff instead"
        ),
    )
    max_subdivisions: int = Field(
        default=200,
        ge=1,
        description="Maximum number of adaptive subintervals",
    )
    second_difference: bool = Field(
        default=False,
        description="Whether the integrand is regularized by a second difference",
    )

    @model_validator(mode="after")
    def _check_integrability(self) -> QuadratureSpec:
        limit = 2.0 if self.second_difference else 1.0
        if self.singularity_exponent >= limit:
            raise ValueError(
                f"singularity exponent {self.singularity_exponent} is not "
                f"integrable (needs s < {limit:g})"
            )
        return self


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True, slots=True)
class Estimate:
    """A quadrature value together with its error bound."""

    value: float
    error: float

    def __add__(self, other: Estimate) -> Estimate:
        return Estimate(self.value + other.value, self.error + other.error)

    def scaled(self, factor: float) -> Estimate:
        """Multiply value and error bound by a constant."""
        return Estimate(factor * self.value, abs(factor) * self.error)


class FarField(BaseModel):
    """Behaviour of an integrand factor at infinity.

    Describes g(y) ~ constant + cosine * cos(frequency * y) for large y. The
    remainder g - far field must decay fast enough for QAGI.
    """

    model_config = ConfigDict(frozen=True)

    constant: float = 0.0
    cosine: float = 0.0
    frequency: float = Field(default=0.0, ge=0)

    def __call__(self, y: float) -> float:
        if self.cosine == 0.0:
            return self.constant
        return self.constant + self.cosine * math.cos(self.frequency * y)


# =============================================================================
# QUADPACK Wrapper
# =============================================================================


def quad_estimate(
    func: RealFunction,
    a: float,
    b: float,
    spec: QuadratureSpec,
    **kwargs: Any,
) -> Estimate:
    """Call scipy.integrate.quad and enforce the spec's tolerances."""
    result = integrate.quad(
        func,
        a,
        b,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        full_output=1,
        **kwargs,
    )
    value, error = float(result[0]), float(result[1])
    if len(result) > 3:
        budget = ROUNDOFF_SLACK * max(spec.abs_tol, spec.rel_tol * abs(value))
        if not math.isfinite(value) or error > budget:
            raise QuadratureError(
                f"quadrature on [{a}, {b}] did not converge: {result[3]}",
                estimate=value,
                error_bound=error,
                details={"a": a, "b": b, "weight": kwargs.get("weight")},
            )
        logger.debug("Accepted flagged quadrature on [%s, %s]: err=%.3g", a, b, error)
    return Estimate(value, error)


# =============================================================================
# Finite Panels
# =============================================================================


def integrate_interval(
    f: RealFunction,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    breakpoints: Sequence[float] = (),
    weight: Weight | None = None,
    frequency: float = 0.0,
) -> Estimate:
    """Integrate f over the finite interval [a, b].

    Args:
        f: Integrand.
        a: Lower limit.
        b: Upper limit (b >= a).
        spec: Tolerances.
        breakpoints: Interior points where f changes scale.
        weight: Optional "cos" or "sin" factor at ``frequency``.
        frequency: Angular frequency of the weight.

    Returns:
        Estimate of the integral.
    """
    if b <= a:
        return Estimate(0.0, 0.0)
    if weight is not None:
        return quad_estimate(f, a, b, spec, weight=weight, wvar=frequency)
    points = sorted(p for p in breakpoints if a < p < b)
    if points:
        return quad_estimate(f, a, b, spec, points=points)
    return quad_estimate(f, a, b, spec)


def integrate_log_interval(
    f: RealFunction,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Estimate:
    """Integrate f over [a, b] (0 < a < b) through y = a * e^u.

    Power-law integrands become exponentials in u, and panels spanning many
    decades above a are resolved uniformly.
    """
    if a <= 0:
        raise DomainError("log substitution needs a > 0", {"a": a})
    if b <= a:
        return Estimate(0.0, 0.0)

    def mapped(u: float) -> float:
        y = a * math.exp(u)
        return f(y) * y

    return quad_estimate(mapped, 0.0, math.log(b / a), spec)


# =============================================================================
# Tails
# =============================================================================


def integrate_tail(
    f: RealFunction,
    a: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    weight: Weight | None = None,
    frequency: float = 0.0,
    breakpoints: Sequence[float] = (),
) -> Estimate:
    """Integrate f (times an optional cos/sin weight) over [a, infinity).

    The range is split at a + R, R being the spec's truncation radius. The
    finite panel [a, a + R] uses QAGS (QAWS when the spec declares a
    singularity exponent at a, QAWO when weighted); the tail uses QAGI, or
    the QAWF Fourier rule when weighted. Breakpoints beyond a + R extend the
    finite panel so that localized bumps are not handed to QAGI.

    Args:
        f: Integrand, continuous on (a, infinity) and absolutely integrable
            (conditionally for weighted tails).
        a: Lower limit.
        spec: Tolerances and truncation radius.
        weight: Optional "cos" or "sin" factor.
        frequency: Angular frequency of the weight.
        breakpoints: Points where f changes scale.

    Returns:
        Estimate of the improper integral.

    Raises:
        QuadratureError: If any panel fails to converge.
    """
    split = a + spec.truncation_radius
    far_points = [p for p in breakpoints if p >= split]
    if far_points:
        split = max(far_points) + spec.truncation_radius

    s = spec.singularity_exponent
    if weight is not None and frequency == 0.0:
        if weight == "sin":
            return Estimate(0.0, 0.0)
        weight = None

    if weight is not None:
        head = integrate_interval(f, a, split, spec, weight=weight, frequency=frequency)
        tail = quad_estimate(f, split, math.inf, spec, weight=weight, wvar=frequency)
        return head + tail

    if s >= 1.0:
        raise DomainError(f"endpoint singularity y^-{s} is not integrable")
    if s > 0:
        head = quad_estimate(
            lambda y: f(y) * (y - a) ** s, a, split, spec, weight="alg", wvar=(-s, 0.0)
        )
    else:
        head = integrate_interval(f, a, split, spec, breakpoints=breakpoints)
    tail = quad_estimate(f, split, math.inf, spec)
    return head + tail


def fourier_cutoff(xi_max: float) -> float:
    """Truncation radius FOURIER_CUTOFF / |xi|_max of an oscillatory integral.

    Raises:
        DomainError: If xi_max is not positive.
    """
    if not xi_max > 0:
        raise DomainError(f"cutoff needs a positive frequency, got {xi_max}")
    return FOURIER_CUTOFF / xi_max


def power_tail(power: float, a: float) -> float:
    """Exact value of the integral of y^(-power) over [a, infinity)."""
    if power <= 1.0:
        raise DivergenceError(f"y^-{power} is not integrable at infinity")
    return a ** (1.0 - power) / (power - 1.0)


# =============================================================================
# Symmetric Singular Integrals
# =============================================================================


def probe_second_difference(g: RealFunction) -> None:
    """Check that g(y) = O(y^2) on a probe grid near the origin.

    Raises:
        DivergenceError: If g(y)/y^2 keeps growing as y decreases.
    """
    ratios = [abs(g(y)) / (y * y) for y in _PROBE_POINTS]
    pairs = zip(ratios, ratios[1:], strict=False)
    growing = all(later > 2.0 * earlier for earlier, later in pairs)
    if growing and ratios[-1] > 1e-12:
        raise DivergenceError(
            "integrand is not O(y^2) at the origin",
            {"probe": list(_PROBE_POINTS), "ratios": ratios},
        )


def integrate_singular_symmetric(
    g: RealFunction,
    alpha: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    *,
    far_field: FarField | None = None,
    breakpoints: Sequence[float] = (),
) -> Estimate:
    """Integrate g(y) |y|^(-alpha-1) over the real line for even g.

    The integral is taken as the symmetric limit, so only y > 0 is sampled
    and the result doubled. The core [0, 1] uses QAWS on g(y)/y^2 against
    the weight y^(1-alpha); the tail [1, infinity) subtracts ``far_field``,
    integrates the decaying remainder with QAGI and adds the far field in
    closed form (constant) or through the Fourier rule (cosine).

    Args:
        g: Even function with g(y) = O(y^2) at the origin.
        alpha: Kernel index in (0, 2).
        spec: Tolerances.
        far_field: Behaviour of g at infinity; None when g itself decays.
        breakpoints: Points y > 1 where g has localized structure.

    Returns:
        Estimate of the integral.

    Raises:
        DomainError: If alpha is outside (0, 2).
        DivergenceError: If g fails the O(y^2) probe.
    """
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"kernel index must lie in (0, 2), got {alpha}")
    probe_second_difference(g)

    def curvature(y: float) -> float:
        y = max(y, CURVATURE_FLOOR)
        return g(y) / (y * y)

    core = quad_estimate(
        curvature, 0.0, 1.0, spec, weight="alg", wvar=(1.0 - alpha, 0.0)
    )

    if far_field is None:
        tail = integrate_tail(
            lambda y: g(y) * y ** (-alpha - 1.0), 1.0, spec, breakpoints=breakpoints
        )
    else:
        far = far_field
        remainder = integrate_tail(
            lambda y: (g(y) - far(y)) * y ** (-alpha - 1.0),
            1.0,
            spec,
            breakpoints=breakpoints,
        )
        tail = remainder + Estimate(far.constant / alpha, 0.0)
        if far.cosine != 0.0:
            oscillating = integrate_tail(
                lambda y: y ** (-alpha - 1.0),
                1.0,
                spec,
                weight="cos",
                frequency=far.frequency,
            )
            tail = tail + oscillating.scaled(far.cosine)
    return (core + tail).scaled(2.0)


__all__ = [
    "CURVATURE_FLOOR",
    "DEFAULT_SPEC",
    "Estimate",
    "FOURIER_CUTOFF",
    "FarField",
    "QuadratureSpec",
    "fourier_cutoff",
    "integrate_interval",
    "integrate_log_interval",
    "integrate_singular_symmetric",
    "integrate_tail",
    "power_tail",
    "quad_estimate",
    "probe_second_difference",
]
