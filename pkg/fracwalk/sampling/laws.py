"""Jump laws, walk configurations and sample batches.

Two jump families are supported:

- ``ParetoExpLaw``: Y = gamma * exp(X), X ~ Exp(alpha), so Y has density
  alpha gamma^alpha y^(-alpha-1) on [gamma, infinity); each jump carries an
  independent sign, +1 with probability p and -1 with probability q.
- ``StudentGaussLaw``: a centered Gaussian vector in R^d whose variance
  (gamma/2) E_alpha is drawn from the reciprocal gamma law; the resulting
  jump is Student distributed with tail order gamma^alpha x^(-2 alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from fracwalk.middleware.validator import validate_skew
from fracwalk.numerics.grids import FloatArray
from fracwalk.utils.errors import (
    DivergenceError,
    NumericalError,
    PoissonOverflowError,
    ShapeMismatchError,
)

DEFAULT_POISSON_CAP = 1.0e8


# =============================================================================
# Jump Laws
# =============================================================================


class ParetoExpLaw(BaseModel):
    """Signed Pareto jumps Y = gamma * exp(X) with Rademacher signs."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["pareto_exp"] = "pareto_exp"
    alpha: float = Field(..., gt=0, description="Tail index")
    gamma: float = Field(..., gt=0, description="Smallest jump magnitude")
    p: float = Field(default=0.5, ge=0, le=1, description="Probability of +1")
    q: float = Field(default=0.5, ge=0, le=1, description="Probability of -1")

    @model_validator(mode="after")
    def _check_skew(self) -> ParetoExpLaw:
        validate_skew(self.p, self.q)
        return self

    @property
    def dimension(self) -> int:
        return 1

    @property
    def is_symmetric(self) -> bool:
        return self.p == self.q

    @property
    def has_mean(self) -> bool:
        return self.alpha > 1.0

    def mean_jump(self) -> FloatArray:
        """E[eps * Y]; finite only for alpha > 1."""
        if self.alpha <= 1.0:
            raise DivergenceError(
                f"Pareto jumps with alpha={self.alpha} have no finite mean"
            )
        magnitude = self.alpha * self.gamma / (self.alpha - 1.0)
        return np.array([(self.p - self.q) * magnitude])

    def magnitude_density(self, y: float) -> float:
        """Density of |Y|: alpha gamma^alpha y^(-alpha-1) on [gamma, inf)."""
        if y < self.gamma:
            return 0.0
        return self.alpha * self.gamma**self.alpha * y ** (-self.alpha - 1.0)

    def density(self, y: float) -> float:
        """Density of the signed jump eps * Y."""
        if y >= 0:
            return self.p * self.magnitude_density(y)
        return self.q * self.magnitude_density(-y)


class StudentGaussLaw(BaseModel):
    """Gaussian jumps in R^d with reciprocal-gamma random variance."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["student_gauss"] = "student_gauss"
    alpha: float = Field(..., gt=0, description="Shape of the variance law")
    gamma: float = Field(..., gt=0, description="Variance scale")
    d: int = Field(default=1, ge=1, le=3, description="Dimension")
    p: float = Field(default=0.5, ge=0, le=1, description="Probability of +1")
    q: float = Field(default=0.5, ge=0, le=1, description="Probability of -1")

    @model_validator(mode="after")
    def _check_skew(self) -> StudentGaussLaw:
        validate_skew(self.p, self.q)
        return self

    @property
    def dimension(self) -> int:
        return self.d

    @property
    def is_symmetric(self) -> bool:
        return True

    @property
    def has_mean(self) -> bool:
        return 2.0 * self.alpha > 1.0

    def mean_jump(self) -> FloatArray:
        """E[eps * Y] = 0 when |Y| is integrable (2 alpha > 1)."""
        if 2.0 * self.alpha <= 1.0:
            raise DivergenceError(
                f"Student jumps with alpha={self.alpha} have no finite mean"
            )
        return np.zeros(self.d)


JumpLaw = Annotated[ParetoExpLaw | StudentGaussLaw, Field(discriminator="kind")]


def symmetrized_density(y: float, law: ParetoExpLaw) -> float:
    """q * nu_Y(-y) 1{y <= -gamma} + p * nu_Y(y) 1{y >= gamma}."""
    return law.density(y)


# =============================================================================
# Walk Configuration
# =============================================================================


class WalkConfig(BaseModel):
    """Parameters of the walk A(t) or its rescaled version A(t / gamma^alpha).

    The walk endpoint is the sum of N signed jumps, N ~ Poisson(lam * t) with
    t replaced by t / gamma^alpha when ``rescale`` is set. ``include_j0``
    adds the extra always-present jump of a sum starting at j = 0.
    """

    model_config = ConfigDict(frozen=True)

    law: JumpLaw
    lam: float = Field(..., gt=0, description="Poisson rate")
    t: float = Field(..., gt=0, description="Time horizon")
    rescale: bool = Field(default=True, description="Divide time by gamma^alpha")
    n: int = Field(default=1, ge=1, description="Sample count")
    seed: int = Field(default=0, ge=0, lt=2**64, description="Master seed")
    include_j0: bool = Field(default=False, description="Add the j=0 jump")
    compensate: bool = Field(
        default=False, description="Subtract the mean drift lam * t * E[eps Y]"
    )
    max_poisson_mean: float = Field(
        default=DEFAULT_POISSON_CAP, gt=0, description="Cap on the Poisson mean"
    )

    @property
    def dimension(self) -> int:
        return self.law.dimension

    @property
    def effective_time(self) -> float:
        """t, or t / gamma^alpha under rescaling."""
        if self.rescale:
            return self.t / self.law.gamma**self.law.alpha
        return self.t

    def poisson_mean(self) -> float:
        """The Poisson mean lam * t_eff, checked against the cap.

        Raises:
            PoissonOverflowError: If the mean is not finite or exceeds the cap.
        """
        mean = self.lam * self.effective_time
        if not math.isfinite(mean) or mean > self.max_poisson_mean:
            raise PoissonOverflowError(
                f"Poisson mean {mean:.4g} exceeds the cap {self.max_poisson_mean:.4g}",
                mean=mean,
                cap=self.max_poisson_mean,
            )
        return mean


def walk_mean_jumps(config: WalkConfig) -> float:
    """Expected number of jumps per endpoint, including the j=0 term."""
    return config.poisson_mean() + (1.0 if config.include_j0 else 0.0)


# =============================================================================
# Sample Batches
# =============================================================================


@dataclass(frozen=True)
class SampleBatch:
    """A batch of n points in R^d with the configuration that produced it.

    Attributes:
        points: Array of shape (n, d).
        config: Echo of the generating parameters (JSON-serializable).
    """

    points: FloatArray
    config: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=np.float64)
        if points.ndim == 1:
            points = points[:, None]
        if points.ndim != 2:
            raise ShapeMismatchError("batch points must have shape (n, d)")
        if not np.all(np.isfinite(points)):
            raise NumericalError("batch contains non-finite samples")
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        return int(self.points.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.points.shape[1])

    @property
    def values(self) -> FloatArray:
        """The first coordinate of every sample."""
        return self.points[:, 0]

    def __len__(self) -> int:
        return self.n


__all__ = [
    "DEFAULT_POISSON_CAP",
    "JumpLaw",
    "ParetoExpLaw",
    "SampleBatch",
    "StudentGaussLaw",
    "WalkConfig",
    "symmetrized_density",
    "walk_mean_jumps",
]
