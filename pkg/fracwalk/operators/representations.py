"""Alternative representations of the fractional generators.

- ``multiplier_apply`` inverts a Fourier multiplier on a function with a
  closed-form transform: (A f)(x) = -(2 pi)^(-d) int exp(-i xi.x) Phi(xi)
  f_hat(xi) dxi.
- ``bochner_subordinate_heat`` subordinates the heat semigroup
  T_s = exp(s Laplacian):
  (alpha / Gamma(1 - alpha)) int_0^inf (T_s f(x) - f(x)) s^(-alpha-1) ds.
- ``cp_generator_apply`` integrates against a jump law: lam int (f(x+y) -
  f(x) - y f'(x)) nu(dy) when compensated, lam int (f(x+y) - f(x)) nu(dy)
  for symmetric laws otherwise.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np

from fracwalk.numerics.fourier import ComplexArray
from fracwalk.numerics.grids import FloatArray
from fracwalk.numerics.quadrature import (
    DEFAULT_SPEC,
    Estimate,
    QuadratureSpec,
    integrate_interval,
    integrate_tail,
    quad_estimate,
)
from fracwalk.numerics.special import gamma_fn
from fracwalk.numerics.sphere import check_dimension, sphere_rule
from fracwalk.operators.fractional import weyl_estimate
from fracwalk.operators.functions import TestFunction
from fracwalk.sampling.laws import JumpLaw, ParetoExpLaw, StudentGaussLaw
from fracwalk.symbols.student import student_density
from fracwalk.utils.errors import DivergenceError, DomainError, NumericalError

logger = logging.getLogger(__name__)

# Row-wise multiplier: (m, d) frequencies -> m complex values.
Multiplier = Callable[[FloatArray], ComplexArray]

# Smallest semigroup time sampled by the Bochner core.
HEAT_FLOOR = 1.0e-12

_SPHERE_NODES = {2: 64, 3: 24}


# =============================================================================
# Multipliers
# =============================================================================


def power_multiplier(beta: float, scale: float = 1.0) -> Multiplier:
    """xi -> scale * |xi|^beta."""

    def phi(xi: FloatArray) -> ComplexArray:
        radius = np.linalg.norm(np.atleast_2d(xi), axis=1)
        return (scale * radius**beta).astype(np.complex128)

    return phi


def pointwise_multiplier(func: Callable[[FloatArray], complex]) -> Multiplier:
    """Row-wise adapter for a callable taking one frequency at a time."""

    def phi(xi: FloatArray) -> ComplexArray:
        rows = np.atleast_2d(xi)
        return np.array([func(row) for row in rows], dtype=np.complex128)

    return phi


def multiplier_estimate(
    f: TestFunction,
    phi: Multiplier,
    x: float | FloatArray,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Estimate:
    """(A f)(x) for the multiplier phi, with the imaginary residue in the error.

    The frequency integral runs over |xi| <= f.frequency_radius(), beyond
    which f_hat is below double precision.

    Raises:
        DomainError: If f has no closed-form transform.
    """
    d = f.dimension
    check_dimension(d)
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if point.size != d:
        raise DomainError(f"point has {point.size} coordinates, expected d={d}")
    cutoff = f.frequency_radius()

    def integrand(rows: FloatArray) -> ComplexArray:
        phase = np.exp(-1j * (rows @ point))
        return phase * phi(rows) * f.fourier(rows)

    if d == 1:
        breakpoints = sorted({-f.frequency, 0.0, f.frequency})

        def real_part(s: float) -> float:
            return float(integrand(np.array([[s]]))[0].real)

        def imag_part(s: float) -> float:
            return float(integrand(np.array([[s]]))[0].imag)

        real = integrate_interval(
            real_part, -cutoff, cutoff, spec, breakpoints=breakpoints
        )
        imag = integrate_interval(
            imag_part, -cutoff, cutoff, spec, breakpoints=breakpoints
        )
    else:
        nodes, weights = sphere_rule(d, _SPHERE_NODES[d])

        def shell(rho: float) -> complex:
            values = integrand(rho * nodes)
            return complex(weights @ values) * rho ** (d - 1)

        real = quad_estimate(lambda rho: shell(rho).real, 0.0, cutoff, spec)
        imag = quad_estimate(lambda rho: shell(rho).imag, 0.0, cutoff, spec)

    scale = -1.0 / (2.0 * math.pi) ** d
    residue = abs(scale * imag.value)
    if residue > 1e-6 * max(1.0, abs(scale * real.value)):
        logger.warning("Multiplier inversion left an imaginary residue %.3g", residue)
    value = real.scaled(scale)
    return Estimate(value.value, value.error + residue)


def multiplier_apply(
    f: TestFunction,
    phi: Multiplier,
    x: float | FloatArray,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """-(2 pi)^(-d) int exp(-i xi.x) Phi(xi) f_hat(xi) dxi (real part)."""
    return multiplier_estimate(f, phi, x, spec).value


# =============================================================================
# Bochner Subordination
# =============================================================================


def bochner_estimate(
    f: TestFunction,
    alpha: float,
    x: float | FloatArray,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Estimate:
    """Subordinated heat semigroup at x with its error bound."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"subordination needs alpha in (0, 1), got {alpha}")
    if f.family in ("constant", "linear"):
        return Estimate(0.0, 0.0)
    if f.growth_order > 1:
        raise DivergenceError(
            "heat subordination of a quadratically growing function diverges",
            {"family": f.family},
        )
    fx = f.value(x)

    def increment_rate(s: float) -> float:
        s = max(s, HEAT_FLOOR)
        return f.heat_increment(s, x) / s

    core = quad_estimate(
        increment_rate, 0.0, 1.0, spec, weight="alg", wvar=(-alpha, 0.0)
    )
    tail = integrate_tail(lambda s: f.heat(s, x) * s ** (-alpha - 1.0), 1.0, spec)
    total = core + tail + Estimate(-fx / alpha, 0.0)
    return total.scaled(alpha / gamma_fn(1.0 - alpha))


def bochner_subordinate_heat(
    f: TestFunction,
    alpha: float,
    x: float | FloatArray,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """(alpha / Gamma(1 - alpha)) int_0^inf (T_s f(x) - f(x)) s^(-alpha-1) ds.

    Equals -(-Laplacian)^alpha f(x); T_s acts in closed form on every
    test function family.
    """
    return bochner_estimate(f, alpha, x, spec).value


# =============================================================================
# Compound Poisson Generator
# =============================================================================


def _tail_index(law: JumpLaw) -> float:
    """Exponent a of P{|Y| > y} ~ y^(-a)."""
    if isinstance(law, ParetoExpLaw):
        return law.alpha
    return 2.0 * law.alpha


def _side_integral(
    h: Callable[[float], float],
    law: JumpLaw,
    sign: float,
    bump: float | None,
    spec: QuadratureSpec,
) -> Estimate:
    """Integral of h(sign * y) against the law's magnitude density on y > 0."""
    if isinstance(law, ParetoExpLaw):
        # y = gamma e^u maps the Pareto density to alpha e^(-alpha u) du.
        gamma = law.gamma
        alpha = law.alpha
        horizon = min(700.0, 700.0 / alpha)
        breakpoints: list[float] = []
        if bump is not None and sign * bump > gamma:
            breakpoints.append(math.log(sign * bump / gamma))

        def mapped(u: float) -> float:
            if u > horizon:
                return 0.0
            return h(sign * gamma * math.exp(u)) * alpha * math.exp(-alpha * u)

        return integrate_tail(mapped, 0.0, spec, breakpoints=breakpoints)

    gamma, alpha = law.gamma, law.alpha
    breakpoints = [math.sqrt(gamma)]
    if bump is not None and sign * bump > 0:
        breakpoints.append(sign * bump)
    return integrate_tail(
        lambda y: h(sign * y) * student_density(y, alpha, gamma, 1),
        0.0,
        spec,
        breakpoints=breakpoints,
    )


def cp_generator_estimate(
    f: TestFunction,
    x: float,
    law: JumpLaw,
    lam: float,
    compensated: bool | None = None,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> Estimate:
    """Compound Poisson generator at x with its error bound.

    Args:
        f: One-dimensional test function.
        x: Evaluation point.
        law: One-dimensional jump law.
        lam: Jump rate.
        compensated: Subtract y f'(x); defaults to True when the law has a
            finite mean.
        spec: Tolerances.

    Raises:
        DivergenceError: If the law has no mean under compensation, is
            skewed without it, or has tails too heavy for f's growth.
    """
    if f.dimension != 1 or law.dimension != 1:
        raise DomainError("the compound Poisson generator is one-dimensional")
    if lam <= 0:
        raise DomainError(f"rate must be positive, got {lam}")
    has_mean = law.has_mean
    if compensated is None:
        compensated = has_mean
    if compensated and not has_mean:
        raise DivergenceError(
            "compensation needs a jump law with a finite mean",
            {"alpha": law.alpha},
        )
    if not compensated and not law.is_symmetric:
        raise DivergenceError(
            "the uncompensated generator needs a symmetric jump law",
            {"p": getattr(law, "p", None), "q": getattr(law, "q", None)},
        )
    if f.family == "constant" or (compensated and f.family == "linear"):
        return Estimate(0.0, 0.0)
    index = _tail_index(law)
    if f.growth_order >= index:
        raise DivergenceError(
            f"jump tails y^-{index:g} do not integrate |y|^{f.growth_order}",
            {"family": f.family, "tail_index": index},
        )

    fx = f.value(x)
    slope = f.derivative(x) if compensated else 0.0

    def h(y: float) -> float:
        return f.value(x + y) - fx - slope * y

    bump = f.center[0] - x if f.is_decaying else None
    if isinstance(law, ParetoExpLaw):
        total = Estimate(0.0, 0.0)
        if law.p > 0:
            total = total + _side_integral(h, law, 1.0, bump, spec).scaled(law.p)
        if law.q > 0:
            total = total + _side_integral(h, law, -1.0, bump, spec).scaled(law.q)
    elif isinstance(law, StudentGaussLaw):
        total = _side_integral(h, law, 1.0, bump, spec) + _side_integral(
            h, law, -1.0, bump, spec
        )
    else:
        raise NumericalError(f"unsupported jump law: {law!r}")
    return total.scaled(lam)


def cp_generator_apply(
    f: TestFunction,
    x: float,
    law: JumpLaw,
    lam: float,
    compensated: bool | None = None,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """lam int (f(x+y) - f(x) [- y f'(x)]) nu(dy)."""
    return cp_generator_estimate(f, x, law, lam, compensated, spec).value


def skewed_stable_generator(
    f: TestFunction,
    alpha: float,
    x: float,
    p: float,
    q: float,
    lam: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Generator of the one-sided stable limit with skew weights (p, q).

    -lam Gamma(1 - alpha) (p D_left^alpha + q D_right^alpha) f(x), whose
    multiplier is minus the limit symbol of the Pareto walks.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(
            f"skewed stable generator needs alpha in (0, 1), got {alpha}"
        )
    total = Estimate(0.0, 0.0)
    if p > 0:
        total = total + weyl_estimate(f, alpha, x, "left", spec).scaled(p)
    if q > 0:
        total = total + weyl_estimate(f, alpha, x, "right", spec).scaled(q)
    return -lam * gamma_fn(1.0 - alpha) * total.value


__all__ = [
    "HEAT_FLOOR",
    "Multiplier",
    "bochner_estimate",
    "bochner_subordinate_heat",
    "cp_generator_apply",
    "cp_generator_estimate",
    "multiplier_apply",
    "multiplier_estimate",
    "pointwise_multiplier",
    "power_multiplier",
    "skewed_stable_generator",
]
