"""Gamma sweeps comparing rescaled walks with their stable limits.

Each row of a sweep draws n walk endpoints at one truncation gamma and n
draws from the exact limit sampler, then records the sup distance between
the walk's empirical CF and the limit CF exp(-t Phi) together with the
two-sample KS statistic of the first coordinates. Row i uses stream
(seed, i): sub-stream 0 for the walk, sub-stream 1 for the limit sampler.
"""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

from fracwalk.convergence.statistics import (
    DEFAULT_KS_LEVEL,
    EcfReport,
    ecf_report,
    ks_critical_value,
    two_sample_ks,
)
from fracwalk.middleware.validator import validate_gamma_list
from fracwalk.numerics.grids import FloatArray, Grid1D, GridD, default_xi_grid
from fracwalk.numerics.quadrature import DEFAULT_SPEC, QuadratureSpec
from fracwalk.operators.functions import TestFunction
from fracwalk.operators.representations import cp_generator_apply
from fracwalk.sampling.laws import JumpLaw, ParetoExpLaw, StudentGaussLaw, WalkConfig
from fracwalk.sampling.stable import (
    sample_isotropic_stable,
    sample_limit_thm1,
    sample_symmetric_stable,
)
from fracwalk.sampling.streams import RngStream
from fracwalk.sampling.walks import sample_walk_batch
from fracwalk.symbols.grid import SymbolSpec, evaluate_symbol_grid, spec_echo, time_map
from fracwalk.utils.errors import ConfigError, DomainError, FracWalkError

logger = logging.getLogger(__name__)

# Monte Carlo slack on CF errors, in units of 1/sqrt(n).
MC_SLACK = 3.0

DEFAULT_FINAL_THRESHOLD = 0.02

LimitSampler = Callable[[np.random.Generator, int], FloatArray]


# =============================================================================
# Sweep Rows
# =============================================================================


class SweepRow(BaseModel):
    """Outcome of one truncation level of a sweep."""

    gamma: float = Field(..., gt=0)
    n: int = Field(..., ge=1)
    cf_error: float | None = Field(default=None, ge=0)
    ks: float | None = Field(default=None, ge=0)
    ks_critical: float = Field(..., gt=0)
    wall_time: float = Field(default=0.0, ge=0, description="Seconds")
    error: str | None = Field(default=None, description="Failure annotation")

    @property
    def ok(self) -> bool:
        return self.error is None


class SweepAcceptance(BaseModel):
    """Verdict of a sweep: CF errors shrink with gamma and end small."""

    monotone: bool
    final_error: float | None
    final_threshold: float
    slack: float
    failed_rows: list[float] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.monotone
            and not self.failed_rows
            and self.final_error is not None
            and self.final_error <= self.final_threshold
        )


def evaluate_sweep(
    rows: Sequence[SweepRow],
    final_threshold: float = DEFAULT_FINAL_THRESHOLD,
    slack_factor: float = MC_SLACK,
) -> SweepAcceptance:
    """Check err(gamma_{i+1}) <= err(gamma_i) + slack and the final error.

    The slack is slack_factor / sqrt(n) with n the smallest row sample count.
    """
    failed = [row.gamma for row in rows if not row.ok]
    errors = [row.cf_error for row in rows if row.cf_error is not None]
    n = min((row.n for row in rows), default=1)
    slack = slack_factor / math.sqrt(n)
    monotone = all(b <= a + slack for a, b in zip(errors, errors[1:], strict=False))
    final = rows[-1].cf_error if rows else None
    return SweepAcceptance(
        monotone=monotone,
        final_error=final,
        final_threshold=final_threshold,
        slack=slack,
        failed_rows=failed,
    )


@dataclass
class SweepResult:
    """Rows, CF reports and verdict of one sweep."""

    spec: SymbolSpec
    t: float
    rows: list[SweepRow]
    reports: list[EcfReport | None]
    acceptance: SweepAcceptance
    params: dict[str, Any] = field(default_factory=dict)

    def to_rows(self) -> FloatArray:
        """Columns gamma, n, cf_error, ks, ks_critical (NaN for failed rows)."""
        return np.array(
            [
                [
                    row.gamma,
                    row.n,
                    math.nan if row.cf_error is None else row.cf_error,
                    math.nan if row.ks is None else row.ks,
                    row.ks_critical,
                ]
                for row in self.rows
            ]
        )

    @staticmethod
    def header() -> list[str]:
        return ["gamma", "n", "cf_error", "ks", "ks_critical"]


# =============================================================================
# Walks and Limit Samplers
# =============================================================================


def walk_config_for(
    spec: SymbolSpec, gamma: float, t: float, n: int, seed: int
) -> WalkConfig:
    """The walk whose rescaled endpoint converges to the spec's limit."""
    law: JumpLaw
    match spec.theorem:
        case "thm1":
            law = ParetoExpLaw(alpha=spec.alpha, gamma=gamma, p=spec.p, q=spec.q)
        case "thm2":
            law = ParetoExpLaw(alpha=spec.alpha, gamma=gamma, p=0.5, q=0.5)
        case "thm3":
            law = StudentGaussLaw(alpha=spec.alpha, gamma=gamma, d=spec.d)
        case _:
            raise DomainError(f"unknown theorem: {spec.theorem}")
    return WalkConfig(law=law, lam=spec.lam, t=t, n=n, seed=seed)


def limit_sampler_for(
    spec: SymbolSpec, t: float, quad: QuadratureSpec = DEFAULT_SPEC
) -> LimitSampler:
    """Exact sampler of the limit law at time t, returning (n, d) arrays."""
    alpha, lam = spec.alpha, spec.lam
    match spec.theorem:
        case "thm1":

            def thm1(rng: np.random.Generator, n: int) -> FloatArray:
                draws = sample_limit_thm1(alpha, spec.p, spec.q, lam, t, rng, n)
                return np.asarray(draws)[:, None]

            return thm1
        case "thm2":
            t_star = time_map("thm2", alpha, lam, t, quad=quad)

            def thm2(rng: np.random.Generator, n: int) -> FloatArray:
                draws = sample_symmetric_stable(alpha, t_star, rng, n)
                return np.asarray(draws)[:, None]

            return thm2
        case "thm3":
            d = spec.d
            t_star = time_map("thm3", alpha, lam, t, d, quad)

            def thm3(rng: np.random.Generator, n: int) -> FloatArray:
                return sample_isotropic_stable(2.0 * alpha, t_star, d, rng, n)

            return thm3
    raise DomainError(f"unknown theorem: {spec.theorem}")


def default_grid(d: int) -> Grid1D | GridD:
    """101 points on [-5, 5], along the first axis when d > 1."""
    radial = default_xi_grid()
    return radial if d == 1 else GridD.axis(radial, d)


# =============================================================================
# Sweep Driver
# =============================================================================


def run_sweep(
    spec: SymbolSpec,
    t: float,
    gammas: Sequence[float],
    n: int,
    seed: int,
    *,
    threads: int = 1,
    xi_grid: Grid1D | GridD | None = None,
    level: float = DEFAULT_KS_LEVEL,
    quad: QuadratureSpec = DEFAULT_SPEC,
) -> SweepResult:
    """Run one gamma sweep towards the limit of ``spec``.

    Args:
        spec: Limit symbol parameters (its gamma is ignored).
        t: Time horizon of the rescaled walk.
        gammas: Strictly decreasing truncation levels.
        n: Samples per row, for the walk and for the limit sampler.
        seed: Master seed.
        threads: Rows evaluated concurrently; output order follows gammas.
        xi_grid: Frequencies; defaults to ``default_grid``.
        level: KS confidence level.
        quad: Tolerances for symbols and time maps.

    Returns:
        SweepResult. A failing row carries an error annotation and does not
        abort the sweep.
    """
    levels = validate_gamma_list(gammas)
    spec = spec.with_gamma(None)
    grid = xi_grid if xi_grid is not None else default_grid(spec.dimension)
    limit_cf = evaluate_symbol_grid(spec, grid, quad).characteristic_function(t)
    sampler = limit_sampler_for(spec, t, quad)
    critical = ks_critical_value(n, n, level)
    echo = {**spec_echo(spec), "t": t}
    logger.info(
        "Sweep %s: alpha=%g, %d levels, n=%d, seed=%d",
        spec.theorem,
        spec.alpha,
        len(levels),
        n,
        seed,
    )

    def run_row(index: int) -> tuple[SweepRow, EcfReport | None]:
        gamma = levels[index]
        stream = RngStream(seed=seed, stream=index)
        started = time.perf_counter()
        try:
            config = walk_config_for(spec, gamma, t, n, seed)
            batch = sample_walk_batch(config, stream=stream.child(0))
            limit = sampler(stream.child(1).generator(), n)
            report = ecf_report(batch, grid, limit_cf, seed, {**echo, "gamma": gamma})
            ks = two_sample_ks(batch, limit[:, 0])
        except FracWalkError as exc:
            logger.warning("Sweep row gamma=%g failed: %s", gamma, exc)
            row = SweepRow(
                gamma=gamma,
                n=n,
                ks_critical=critical,
                wall_time=time.perf_counter() - started,
                error=f"{type(exc).__name__}: {exc.message}",
            )
            return row, None
        row = SweepRow(
            gamma=gamma,
            n=n,
            cf_error=report.sup_error,
            ks=ks,
            ks_critical=critical,
            wall_time=time.perf_counter() - started,
        )
        logger.info(
            "gamma=%g: cf_error=%.4g ks=%.4g (critical %.4g)",
            gamma,
            row.cf_error,
            ks,
            critical,
        )
        return row, report

    if threads <= 1:
        outcomes = [run_row(i) for i in range(len(levels))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(run_row, range(len(levels))))
    rows = [row for row, _ in outcomes]
    return SweepResult(
        spec=spec,
        t=t,
        rows=rows,
        reports=[report for _, report in outcomes],
        acceptance=evaluate_sweep(rows),
        params={**echo, "gammas": levels, "n": n, "seed": seed, "level": level},
    )


def run_sweep_thm1(
    alpha: float,
    p: float,
    q: float,
    lam: float,
    t: float,
    gammas: Sequence[float],
    n: int,
    seed: int,
    **options: Any,
) -> SweepResult:
    """Skewed Pareto walks towards H1(p t*) - H2(q t*)."""
    spec = SymbolSpec(theorem="thm1", alpha=alpha, lam=lam, p=p, q=q)
    return run_sweep(spec, t, gammas, n, seed, **options)


def run_sweep_thm2(
    alpha: float,
    lam: float,
    t: float,
    gammas: Sequence[float],
    n: int,
    seed: int,
    **options: Any,
) -> SweepResult:
    """Symmetric Pareto walks towards the symmetric stable law."""
    spec = SymbolSpec(theorem="thm2", alpha=alpha, lam=lam)
    return run_sweep(spec, t, gammas, n, seed, **options)


def run_sweep_thm3(
    alpha: float,
    lam: float,
    t: float,
    d: int,
    gammas: Sequence[float],
    n: int,
    seed: int,
    **options: Any,
) -> SweepResult:
    """Student walks in R^d towards the isotropic stable law of index 2 alpha."""
    spec = SymbolSpec(theorem="thm3", alpha=alpha, lam=lam, d=d)
    return run_sweep(spec, t, gammas, n, seed, **options)


# =============================================================================
# Generator Limit
# =============================================================================


class GeneratorRow(BaseModel):
    """Difference quotient (E f(x + Z_h) - f(x)) / h against the generator."""

    h: float = Field(..., gt=0)
    n: int = Field(..., ge=1)
    quotient: float
    target: float
    error: float = Field(..., ge=0)
    stderr: float = Field(..., ge=0)


def run_generator_limit(
    f: TestFunction,
    x: float,
    law: JumpLaw,
    lam: float,
    h_list: Sequence[float],
    n: int,
    seed: int,
    *,
    threads: int = 1,
    quad: QuadratureSpec = DEFAULT_SPEC,
) -> list[GeneratorRow]:
    """Monte Carlo difference quotients of the (compensated) Poisson walk.

    The walk is unscaled, run for time h, and compensated whenever the law
    has a finite mean. Step i draws from stream (seed, i).
    """
    steps = [float(h) for h in h_list]
    if not steps or any(h <= 0 for h in steps):
        raise ConfigError("step sizes must be positive", field="h")
    if any(b >= a for a, b in zip(steps, steps[1:], strict=False)):
        raise ConfigError("step sizes must be strictly decreasing", field="h")
    compensate = law.has_mean
    target = cp_generator_apply(f, x, law, lam, compensated=compensate, spec=quad)
    fx = f.value(x)
    rows: list[GeneratorRow] = []
    for index, h in enumerate(steps):
        config = WalkConfig(
            law=law, lam=lam, t=h, rescale=False, n=n, seed=seed, compensate=compensate
        )
        batch = sample_walk_batch(config, threads, RngStream(seed=seed, stream=index))
        increments = f.evaluate(x + batch.points) - fx
        quotient = float(np.mean(increments)) / h
        spread = float(np.std(increments, ddof=1)) if n > 1 else 0.0
        stderr = spread / (h * math.sqrt(n))
        rows.append(
            GeneratorRow(
                h=h,
                n=n,
                quotient=quotient,
                target=target,
                error=abs(quotient - target),
                stderr=stderr,
            )
        )
        logger.info("h=%g: quotient=%.5g target=%.5g", h, quotient, target)
    return rows


def generator_limit_converges(
    rows: Sequence[GeneratorRow],
    tolerance: float = 0.05,
    slack_factor: float = MC_SLACK,
) -> bool:
    """Errors shrink with h up to slack_factor standard errors and end small."""
    if not rows:
        return False
    shrinking = all(
        b.error <= a.error + slack_factor * (a.stderr + b.stderr)
        for a, b in zip(rows, rows[1:], strict=False)
    )
    return shrinking and rows[-1].error <= tolerance


__all__ = [
    "DEFAULT_FINAL_THRESHOLD",
    "GeneratorRow",
    "LimitSampler",
    "MC_SLACK",
    "SweepAcceptance",
    "SweepResult",
    "SweepRow",
    "default_grid",
    "evaluate_sweep",
    "generator_limit_converges",
    "limit_sampler_for",
    "run_generator_limit",
    "run_sweep",
    "run_sweep_thm1",
    "run_sweep_thm2",
    "run_sweep_thm3",
    "walk_config_for",
]
