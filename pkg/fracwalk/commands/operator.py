"""The ``operator`` command: a fractional operator applied to a test function."""

from __future__ import annotations

import logging
from typing import Any

from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.commands.base import CommandOutcome, execute_stage
from fracwalk.numerics.grids import Grid1D
from fracwalk.operators.results import evaluate_operator, multiplier_gap
from fracwalk.schemas.config import RunConfig

logger = logging.getLogger(__name__)

# Frequencies of the multiplier comparison.
CHECK_XI_EXTENT = 4.0
CHECK_XI_POINTS = 33
MULTIPLIER_TOLERANCE = 1e-4


def run_operator(config: RunConfig, store: ArtifactStore) -> CommandOutcome:
    """Evaluate the operator on the x grid and write ``operator.csv``/``.json``.

    For one-dimensional functions with a Fourier transform the command also
    compares the transform of the output with m(xi) f_hat(xi) on
    |xi| <= 4; a gap above 1e-4 is reported as a failure.
    """
    f = config.test_function()
    order = config.operator_order
    grid = config.x_grid()
    timings = store.manifest.stage_timings_ms
    params: dict[str, Any] = {
        "operator": config.operator,
        "order": order,
        "function": f.model_dump(mode="json"),
        "points": len(grid),
    }

    result = execute_stage(
        "evaluate_operator",
        params,
        lambda: evaluate_operator(config.operator, f, grid, order),
        timings,
    )
    summary: dict[str, Any] = {
        "operator": config.operator,
        "order": order,
        "points": len(grid),
        "max_error_bound": float(result.errors.max()),
    }
    failures: list[str] = []

    if config.multiplier_check and f.dimension == 1 and f.has_fourier_transform:
        xi = Grid1D.uniform(-CHECK_XI_EXTENT, CHECK_XI_EXTENT, CHECK_XI_POINTS)
        gap = execute_stage(
            "multiplier_gap",
            params,
            lambda: multiplier_gap(config.operator, f, order, xi),
            timings,
        )
        summary["multiplier_gap"] = gap
        if gap > MULTIPLIER_TOLERANCE:
            failures.append("multiplier_gap")
    elif config.multiplier_check:
        logger.info("Skipping the multiplier check for %s", f.family)

    payload = {
        "params": {**result.params, "operator": result.operator},
        "x": result.points,
        "values": result.values,
        "errors": result.errors,
        "summary": summary,
    }
    store.write("operator", config.format, result.to_rows(), result.header(), payload)
    return CommandOutcome(summary=summary, failures=failures)


__all__ = ["MULTIPLIER_TOLERANCE", "run_operator"]
