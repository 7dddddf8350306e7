"""Symbol specifications, symbol grids, time maps and walk CFs."""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from fracwalk.middleware.validator import validate_theorem_hypotheses
from fracwalk.numerics.fourier import ComplexArray
from fracwalk.numerics.grids import FloatArray, Grid1D, GridD, as_points
from fracwalk.numerics.quadrature import DEFAULT_SPEC, QuadratureSpec
from fracwalk.numerics.special import gamma_fn
from fracwalk.sampling.laws import (
    ParetoExpLaw,
    StudentGaussLaw,
    WalkConfig,
    walk_mean_jumps,
)
from fracwalk.symbols.constants import constant_C1, constant_Cd
from fracwalk.symbols.student import student_kernel_constant
from fracwalk.symbols.theorem1 import pareto_symbol, symbol_thm1_limit
from fracwalk.symbols.theorem2 import symbol_thm2_limit, symbol_thm2_pre
from fracwalk.symbols.theorem3 import (
    symbol_thm3_closed_form,
    symbol_thm3_limit,
    symbol_thm3_pre,
)
from fracwalk.utils.errors import DomainError, ShapeMismatchError

logger = logging.getLogger(__name__)

Theorem = Literal["thm1", "thm2", "thm3"]


# =============================================================================
# Symbol Specification
# =============================================================================


class SymbolSpec(BaseModel):
    """Parameters of one Fourier symbol, pre-limit (gamma set) or limit."""

    model_config = ConfigDict(frozen=True)

    theorem: Theorem = Field(..., description="Which limit theorem")
    alpha: float = Field(..., gt=0, description="Index")
    lam: float = Field(default=1.0, gt=0, description="Poisson rate")
    p: float = Field(default=0.5, ge=0, le=1, description="Probability of +1")
    q: float = Field(default=0.5, ge=0, le=1, description="Probability of -1")
    gamma: float | None = Field(
        default=None, gt=0, description="Truncation; None selects the limit symbol"
    )
    d: int = Field(default=1, ge=1, le=3, description="Dimension (thm3 only)")

    @model_validator(mode="after")
    def _check_hypotheses(self) -> SymbolSpec:
        validate_theorem_hypotheses(self.theorem, self.alpha, self.p, self.q, self.d)
        return self

    @property
    def is_limit(self) -> bool:
        return self.gamma is None

    @property
    def dimension(self) -> int:
        return self.d if self.theorem == "thm3" else 1

    def with_gamma(self, gamma: float | None) -> SymbolSpec:
        """Copy of this spec with another truncation (None for the limit)."""
        return self.model_copy(update={"gamma": gamma})

    def evaluator(self, quad: QuadratureSpec = DEFAULT_SPEC) -> SymbolEvaluator:
        """A callable xi -> Phi(xi) with constants computed once."""
        return SymbolEvaluator(self, quad)


class SymbolEvaluator:
    """Evaluates the symbol of a SymbolSpec at single frequencies."""

    def __init__(self, spec: SymbolSpec, quad: QuadratureSpec = DEFAULT_SPEC):
        self.spec = spec
        self.quad = quad
        self._c1: float | None = None
        self._cd: float | None = None
        if spec.is_limit and spec.theorem == "thm2":
            self._c1 = constant_C1(spec.alpha, spec=quad)
        if spec.is_limit and spec.theorem == "thm3":
            self._cd = constant_Cd(spec.alpha, spec.d, quad)

    def __call__(self, xi: float | FloatArray) -> complex:
        spec = self.spec
        point = np.atleast_1d(np.asarray(xi, dtype=np.float64))
        if point.size != spec.dimension:
            raise ShapeMismatchError(
                f"frequency has {point.size} coordinates, expected {spec.dimension}"
            )
        if spec.gamma is None:
            return self._limit(point)
        return self._pre_limit(point, spec.gamma)

    def _limit(self, point: FloatArray) -> complex:
        spec = self.spec
        scalar = float(point[0])
        match spec.theorem:
            case "thm1":
                return symbol_thm1_limit(scalar, spec.alpha, spec.lam, spec.p, spec.q)
            case "thm2":
                value = symbol_thm2_limit(
                    scalar, spec.alpha, spec.lam, self.quad, c1=self._c1
                )
            case "thm3":
                value = symbol_thm3_limit(
                    point, spec.alpha, spec.lam, spec.d, self.quad, cd=self._cd
                )
        return complex(value, 0.0)

    def _pre_limit(self, point: FloatArray, gamma: float) -> complex:
        spec = self.spec
        scalar = float(point[0])
        match spec.theorem:
            case "thm1":
                return pareto_symbol(
                    scalar, spec.alpha, gamma, spec.lam, spec.p, spec.q, self.quad
                )
            case "thm2":
                value = symbol_thm2_pre(scalar, spec.alpha, gamma, spec.lam, self.quad)
            case "thm3":
                value = symbol_thm3_pre(
                    point, spec.alpha, gamma, spec.lam, spec.d, self.quad
                )
        return complex(value, 0.0)


# =============================================================================
# Symbol Grid
# =============================================================================


@dataclass(frozen=True)
class SymbolGrid:
    """Complex symbol values on a frequency grid.

    Attributes:
        grid: Frequencies (Grid1D, or GridD for d > 1).
        values: Phi at each frequency.
        spec: The symbol parameters.
    """

    grid: Grid1D | GridD
    values: ComplexArray
    spec: SymbolSpec

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.complex128)
        if values.shape != (len(self.grid),):
            raise ShapeMismatchError(
                "symbol values must align with the grid",
                {"grid": len(self.grid), "values": values.shape},
            )
        object.__setattr__(self, "values", values)

    @property
    def points(self) -> FloatArray:
        return as_points(self.grid)

    def hermitian_gap(self) -> float:
        """max |Phi(-xi) - conj Phi(xi)| over points whose negation is on the grid."""
        points = self.points
        lookup = {tuple(np.round(p, 12)): i for i, p in enumerate(points)}
        gap = 0.0
        for i, p in enumerate(points):
            j = lookup.get(tuple(np.round(-p, 12)))
            if j is not None:
                gap = max(gap, abs(self.values[j] - np.conj(self.values[i])))
        return float(gap)

    def characteristic_function(self, t: float) -> ComplexArray:
        """exp(-t Phi) on the grid."""
        return np.exp(-t * self.values)

    def to_rows(self) -> FloatArray:
        """Columns: frequency coordinates, Re Phi, Im Phi."""
        return np.column_stack([self.points, self.values.real, self.values.imag])

    def header(self) -> list[str]:
        d = self.points.shape[1]
        names = ["xi"] if d == 1 else [f"xi{k + 1}" for k in range(d)]
        return [*names, "re_phi", "im_phi"]


def evaluate_symbol_grid(
    spec: SymbolSpec,
    grid: Grid1D | GridD,
    quad: QuadratureSpec = DEFAULT_SPEC,
) -> SymbolGrid:
    """Evaluate a symbol at every grid frequency.

    Args:
        spec: Symbol parameters.
        grid: Frequencies; GridD must match the spec's dimension.
        quad: Tolerances.

    Returns:
        SymbolGrid with Phi(0) = 0 exactly wherever 0 is on the grid.
    """
    evaluate = spec.evaluator(quad)
    points = as_points(grid)
    logger.debug("Evaluating %s symbol on %d frequencies", spec.theorem, len(points))
    values = np.array([evaluate(p) for p in points], dtype=np.complex128)
    return SymbolGrid(grid, values, spec)


# =============================================================================
# Time Maps and Characteristic Functions
# =============================================================================


def time_map(
    theorem: Theorem,
    alpha: float,
    lam: float,
    t: float,
    d: int = 1,
    quad: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Limit time t* of each theorem.

    thm1: lam Gamma(1 - alpha) t; thm2: alpha lam C(alpha) t;
    thm3: lam K_d C_d(alpha) t.
    """
    match theorem:
        case "thm1":
            return lam * gamma_fn(1.0 - alpha) * t
        case "thm2":
            return alpha * lam * constant_C1(alpha, spec=quad) * t
        case "thm3":
            kernel = student_kernel_constant(alpha, d)
            return lam * kernel * constant_Cd(alpha, d, quad) * t
    raise DomainError(f"unknown theorem: {theorem}")


def walk_symbol(
    xi: float | FloatArray, config: WalkConfig, quad: QuadratureSpec = DEFAULT_SPEC
) -> complex:
    """Phi_gamma(xi) of the jump law with the gamma^alpha rate factor removed.

    Equals (lam / gamma^alpha) (1 - E exp(i xi.eps Y)) for both jump families.
    """
    law = config.law
    match law:
        case ParetoExpLaw():
            scalar = float(np.atleast_1d(xi)[0])
            return pareto_symbol(
                scalar, law.alpha, law.gamma, config.lam, law.p, law.q, quad
            )
        case StudentGaussLaw():
            value = symbol_thm3_closed_form(xi, law.alpha, law.gamma, config.lam)
            return complex(value)
    raise DomainError(f"unsupported jump law: {law!r}")


def walk_cf(
    xi: float | FloatArray, config: WalkConfig, quad: QuadratureSpec = DEFAULT_SPEC
) -> complex:
    """Exact characteristic function of one walk endpoint.

    log E exp(i xi.A) = -(t_eff gamma^alpha) Phi_gamma(xi), times the j=0
    jump's characteristic function 1 - gamma^alpha Phi_gamma(xi) / lam when
    ``include_j0`` is set, and times exp(-i xi.m) for the compensated walk
    with m = (lam t_eff + 1{j=0 jump}) E[eps Y].
    """
    law = config.law
    point = np.atleast_1d(np.asarray(xi, dtype=np.float64))
    if not np.any(point):
        return 1.0 + 0j
    scale = law.gamma**law.alpha
    phi = walk_symbol(point, config, quad)
    value = cmath.exp(-config.effective_time * scale * phi)
    if config.include_j0:
        value *= 1.0 - scale * phi / config.lam
    if config.compensate:
        drift = walk_mean_jumps(config) * law.mean_jump()
        value *= cmath.exp(-1j * float(point @ drift))
    return value


def stable_symbol_cf(xi: FloatArray, beta: float, t_star: float) -> ComplexArray:
    """exp(-t* |xi|^beta) row-wise for an (m, d) array of frequencies."""
    radius = np.linalg.norm(np.atleast_2d(xi), axis=1)
    return np.exp(-t_star * radius**beta).astype(np.complex128)


def spec_echo(spec: SymbolSpec) -> dict[str, Any]:
    return spec.model_dump(mode="json")


__all__ = [
    "SymbolEvaluator",
    "SymbolGrid",
    "SymbolSpec",
    "Theorem",
    "evaluate_symbol_grid",
    "spec_echo",
    "stable_symbol_cf",
    "time_map",
    "walk_cf",
    "walk_symbol",
]
