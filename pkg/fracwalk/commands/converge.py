"""The ``converge`` command: gamma sweeps and the generator-limit experiment."""

from __future__ import annotations

import logging

import numpy as np

from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.commands.base import CommandOutcome, execute_stage
from fracwalk.commands.symbol import symbol_spec
from fracwalk.convergence.sweeps import (
    generator_limit_converges,
    run_generator_limit,
    run_sweep,
)
from fracwalk.sampling.laws import ParetoExpLaw
from fracwalk.schemas.config import RunConfig

logger = logging.getLogger(__name__)

GENERATOR_HEADER = ["h", "n", "quotient", "target", "error", "stderr"]


def run_converge(config: RunConfig, store: ArtifactStore) -> CommandOutcome:
    match config.experiment:
        case "generator":
            return run_generator(config, store)
        case _:
            return run_convergence_sweep(config, store)


def run_convergence_sweep(config: RunConfig, store: ArtifactStore) -> CommandOutcome:
    """Sweep gamma towards the configured theorem's limit.

    Writes ``sweep`` (one row per gamma) and, in JSON, the acceptance verdict
    with every row's CF report. A failed verdict is reported as a failure so
    the run exits with the acceptance code.
    """
    spec = symbol_spec(config)
    grid = config.xi_grid(spec.dimension)
    params = {**config.echo(), "points": len(grid)}
    result = execute_stage(
        "run_sweep",
        params,
        lambda: run_sweep(
            spec,
            config.t,
            config.gammas,
            config.n,
            config.seed,
            threads=config.threads,
            xi_grid=grid,
            level=config.level,
        ),
        store.manifest.stage_timings_ms,
    )
    acceptance = result.acceptance
    payload = {
        "params": result.params,
        "acceptance": {**acceptance.model_dump(), "passed": acceptance.passed},
        "rows": [row.model_dump(exclude={"wall_time"}) for row in result.rows],
        "reports": [r.to_dict() if r is not None else None for r in result.reports],
    }
    store.write("sweep", config.format, result.to_rows(), result.header(), payload)
    store.manifest.stage_timings_ms.update(
        {f"row_gamma_{row.gamma:g}": row.wall_time * 1000 for row in result.rows}
    )

    failures: list[str] = []
    if not acceptance.monotone:
        failures.append("cf_error_monotone")
    if acceptance.failed_rows:
        failures.append("row_failures")
    final = acceptance.final_error
    if final is None or final > acceptance.final_threshold:
        failures.append("final_cf_error")
    ks_above = [
        row.gamma
        for row in result.rows
        if row.ks is not None and row.ks > row.ks_critical
    ]
    logger.info(
        "Sweep verdict: %s (final CF error %s, KS above band at %s)",
        "passed" if acceptance.passed else "failed",
        "n/a" if final is None else f"{final:.4g}",
        ks_above or "none",
    )
    summary = {
        "rows": len(result.rows),
        "final_cf_error": final,
        "monotone": acceptance.monotone,
        "ks_above_band": ks_above,
    }
    return CommandOutcome(summary=summary, failures=failures)


def run_generator(config: RunConfig, store: ArtifactStore) -> CommandOutcome:
    """Monte Carlo semigroup quotients (E f(x + Z_h) - f(x)) / h.

    Uses Pareto jumps with index alpha, smallest jump gamma (1 when unset)
    and signs p, q; the test function comes from the operator options.
    """
    f = config.test_function()
    law = ParetoExpLaw(
        alpha=config.alpha,
        gamma=config.gamma if config.gamma is not None else 1.0,
        p=config.p,
        q=config.q,
    )
    params = {
        "law": law.model_dump(),
        "function": f.model_dump(mode="json"),
        "x": config.x,
        "h": config.h_list,
        "n": config.n,
        "seed": config.seed,
    }
    rows = execute_stage(
        "run_generator_limit",
        params,
        lambda: run_generator_limit(
            f,
            config.x,
            law,
            config.lam,
            config.h_list,
            config.n,
            config.seed,
            threads=config.threads,
        ),
        store.manifest.stage_timings_ms,
    )
    table = np.array(
        [[r.h, r.n, r.quotient, r.target, r.error, r.stderr] for r in rows]
    )
    converged = generator_limit_converges(rows)
    payload = {
        "params": params,
        "converged": converged,
        "rows": [row.model_dump() for row in rows],
    }
    store.write("generator", config.format, table, GENERATOR_HEADER, payload)
    summary = {
        "target": rows[-1].target,
        "final_quotient": rows[-1].quotient,
        "final_error": rows[-1].error,
        "converged": converged,
    }
    return CommandOutcome(
        summary=summary, failures=[] if converged else ["generator_limit"]
    )


__all__ = [
    "GENERATOR_HEADER",
    "run_converge",
    "run_convergence_sweep",
    "run_generator",
]
