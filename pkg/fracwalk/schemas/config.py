"""Pydantic models for fracwalk run configurations.

A RunConfig holds every parameter a command can read. Values come from an
INI file (``[common]`` plus one section per command) and from command-line
flags, flags taking precedence. Models are divided into:

- Grid parameters: frequency and evaluation grids shared by the commands
- Run configuration: the validated input of ``fracwalk.cli.run``
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from fracwalk.middleware.validator import (
    normalize_theorem,
    validate_gamma_list,
    validate_skew,
    validate_theorem_hypotheses,
)
from fracwalk.numerics.grids import Grid1D, GridD
from fracwalk.operators.functions import Family, TestFunction
from fracwalk.operators.results import OperatorName
from fracwalk.symbols.grid import Theorem
from fracwalk.utils.errors import ConfigError

Command = Literal["symbol", "simulate", "converge", "operator", "verify"]
OutputFormat = Literal["csv", "json", "both"]
Experiment = Literal["sweep", "generator"]

COMMANDS: tuple[Command, ...] = ("symbol", "simulate", "converge", "operator", "verify")


# =============================================================================
# Grid Parameter Models
# =============================================================================


class GridParams(BaseModel):
    """Uniform grid on [-extent, extent], laid along the first axis for d > 1."""

    model_config = ConfigDict(frozen=True)

    points: int = Field(default=101, ge=1, le=100_001, description="Grid size")
    extent: float = Field(default=5.0, gt=0, description="Half-width of the grid")

    def build(self, d: int = 1, center: float = 0.0) -> Grid1D | GridD:
        radial = Grid1D.uniform(center - self.extent, center + self.extent, self.points)
        return radial if d == 1 else GridD.axis(radial, d)


# =============================================================================
# Run Configuration
# =============================================================================


class RunConfig(BaseModel):
    """Validated parameters of one fracwalk command.

    Theorem hypotheses are checked for every command that builds a walk or
    a symbol. The generator experiment and the operator command take any
    jump law or order and only enforce p + q = 1.
    """

    model_config = ConfigDict(frozen=True)

    command: Command = Field(..., description="Command to run")
    theorem: Theorem = Field(default="thm2", description="Limit theorem")

    # Walk and symbol parameters
    alpha: float = Field(default=0.5, gt=0, description="Index alpha")
    gamma: float | None = Field(
        default=None, gt=0, description="Truncation; None selects the limit"
    )
    gammas: list[float] = Field(
        default_factory=lambda: [0.1, 0.01, 0.001],
        description="Strictly decreasing truncation sweep",
    )
    lam: float = Field(default=1.0, gt=0, description="Poisson rate lambda")
    p: float = Field(default=0.5, ge=0, le=1, description="Probability of +1")
    q: float = Field(default=0.5, ge=0, le=1, description="Probability of -1")
    t: float = Field(default=1.0, gt=0, description="Time horizon")
    d: int = Field(default=1, ge=1, le=3, description="Dimension")
    n: int = Field(default=10_000, ge=1, description="Samples per batch")
    seed: int = Field(default=0, ge=0, lt=2**64, description="Master seed")
    level: float = Field(default=0.99, gt=0, lt=1, description="KS confidence level")

    # Grids
    xi_points: int = Field(default=101, ge=2, description="Frequency grid size")
    xi_extent: float = Field(default=5.0, gt=0, description="Frequency half-width")
    x_points: int = Field(default=41, ge=1, description="Evaluation grid size")
    x_extent: float = Field(default=4.0, gt=0, description="Evaluation half-width")

    # Operator and generator parameters
    operator: OperatorName = Field(
        default="frac_laplacian", description="Operator to evaluate"
    )
    order: float | None = Field(
        default=None, gt=0, description="Operator order; defaults to alpha"
    )
    family: Family = Field(default="gaussian", description="Test function family")
    width: float = Field(default=1.0, gt=0, description="Test function width")
    frequency: float = Field(default=0.0, ge=0, description="Modulation frequency")
    center: float = Field(default=0.0, description="Test function center")
    multiplier_check: bool = Field(
        default=True, description="Compare the operator's transform with m(xi) f_hat"
    )
    experiment: Experiment = Field(default="sweep", description="converge mode")
    h_list: list[float] = Field(
        default_factory=lambda: [0.1, 0.05, 0.025],
        description="Decreasing semigroup time steps",
    )
    x: float = Field(default=0.0, description="Evaluation point of the generator")

    # Output
    out_dir: Path | None = Field(default=None, description="Output directory")
    format: OutputFormat = Field(default="csv", description="Artifact format")
    threads: int = Field(default=1, ge=1, le=256, description="Worker threads")

    @field_validator("theorem", mode="before")
    @classmethod
    def _normalize_theorem(cls, value: object) -> object:
        if isinstance(value, str | int):
            return normalize_theorem(value)
        return value

    @model_validator(mode="after")
    def _check_hypotheses(self) -> RunConfig:
        validate_skew(self.p, self.q)
        if self.needs_theorem:
            validate_theorem_hypotheses(
                self.theorem, self.alpha, self.p, self.q, self.d
            )
            if self.theorem != "thm3" and self.d != 1:
                raise ConfigError(
                    f"{self.theorem} is one-dimensional, got d={self.d}", field="d"
                )
        if self.command == "converge" and self.experiment == "sweep":
            validate_gamma_list(self.gammas)
        return self

    @property
    def needs_theorem(self) -> bool:
        """Whether the command builds a theorem's walk or symbol."""
        if self.command in ("symbol", "simulate"):
            return True
        return self.command == "converge" and self.experiment == "sweep"

    @property
    def operator_order(self) -> float:
        return self.order if self.order is not None else self.alpha

    def xi_grid(self, d: int | None = None) -> Grid1D | GridD:
        grid = GridParams(points=self.xi_points, extent=self.xi_extent)
        return grid.build(self.d if d is None else d)

    def x_grid(self) -> Grid1D | GridD:
        grid = GridParams(points=self.x_points, extent=self.x_extent)
        return grid.build(self.d, self.center if self.d == 1 else 0.0)

    def test_function(self) -> TestFunction:
        """The test function described by family, center, width and frequency."""
        try:
            return TestFunction(
                family=self.family,
                center=(self.center,) * self.d,
                width=self.width,
                frequency=self.frequency,
            )
        except ValueError as e:
            raise ConfigError(str(e), field="family") from e

    def echo(self) -> dict[str, object]:
        """JSON-ready echo without the output directory."""
        return self.model_dump(mode="json", exclude={"out_dir"})


__all__ = [
    "COMMANDS",
    "Command",
    "Experiment",
    "GridParams",
    "OutputFormat",
    "RunConfig",
]
