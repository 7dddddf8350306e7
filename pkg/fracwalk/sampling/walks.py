"""Rescaled compound Poisson walks and deterministic batch assembly.

A batch of n samples is cut into fixed-size blocks. Block b is drawn from
sub-stream b of the batch stream, so the result depends only on the
configuration and seed; threads change the schedule, never the draws.
Inside a block all Poisson counts are drawn first, then every jump of the
block at once, and per-sample sums are formed with ``np.bincount``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import Any

import numpy as np

from fracwalk.numerics.grids import FloatArray
from fracwalk.sampling.laws import (
    ParetoExpLaw,
    SampleBatch,
    StudentGaussLaw,
    WalkConfig,
    walk_mean_jumps,
)
from fracwalk.sampling.streams import RngStream
from fracwalk.sampling.variates import (
    sample_pareto_jump,
    sample_rademacher,
    sample_student_jump,
)
from fracwalk.utils.errors import DomainError

logger = logging.getLogger(__name__)

# Jumps drawn per block, before dividing by the expected jumps per sample.
BLOCK_JUMP_BUDGET = 2**22
MIN_BLOCK = 16
MAX_BLOCK = 4096

BlockDrawer = Callable[[int, np.random.Generator], FloatArray]


# =============================================================================
# Batch Assembly
# =============================================================================


def block_size_for(mean_jumps: float) -> int:
    """Samples per block so a block holds about BLOCK_JUMP_BUDGET jumps."""
    size = int(BLOCK_JUMP_BUDGET // max(1.0, math.ceil(mean_jumps)))
    return max(MIN_BLOCK, min(MAX_BLOCK, size))


def draw_blocks(
    draw: BlockDrawer,
    n: int,
    stream: RngStream,
    block_size: int,
    threads: int = 1,
) -> FloatArray:
    """Assemble n draws from fixed-size blocks, block b on sub-stream b.

    Args:
        draw: Function (count, generator) -> array of shape (count, d).
        n: Total number of samples.
        stream: Stream of the whole batch.
        block_size: Samples per block (the last block may be shorter).
        threads: Worker threads; results are merged in block order.

    Returns:
        Array of shape (n, d).
    """
    if n < 1:
        raise DomainError(f"sample count must be >= 1, got {n}")
    sizes = [min(block_size, n - start) for start in range(0, n, block_size)]

    def run(index: int) -> FloatArray:
        block = np.asarray(draw(sizes[index], stream.child(index).generator()))
        return block.reshape(sizes[index], -1)

    if threads <= 1 or len(sizes) == 1:
        blocks = [run(i) for i in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(run, range(len(sizes))))
    return np.concatenate(blocks, axis=0)


# =============================================================================
# Walk Endpoints
# =============================================================================


def _draw_jumps(config: WalkConfig, count: int, rng: np.random.Generator) -> FloatArray:
    law = config.law
    match law:
        case ParetoExpLaw():
            magnitudes = sample_pareto_jump(law.alpha, law.gamma, rng, count)
            signs = sample_rademacher(law.p, rng, count)
            return (signs * magnitudes)[:, None]
        case StudentGaussLaw():
            jumps = sample_student_jump(law.alpha, law.gamma, law.d, rng, count)
            signs = sample_rademacher(law.p, rng, count)
            return signs[:, None] * jumps
    raise DomainError(f"unsupported jump law: {law!r}")


def _walk_block(
    config: WalkConfig, count: int, rng: np.random.Generator
) -> FloatArray:
    """Endpoints of ``count`` independent walks."""
    mean = config.poisson_mean()
    jumps_per_walk = rng.poisson(mean, count)
    if config.include_j0:
        jumps_per_walk = jumps_per_walk + 1
    total = int(jumps_per_walk.sum())
    d = config.dimension
    if total == 0:
        endpoints = np.zeros((count, d))
    else:
        jumps = _draw_jumps(config, total, rng)
        owners = np.repeat(np.arange(count), jumps_per_walk)
        endpoints = np.column_stack(
            [
                np.bincount(owners, weights=jumps[:, k], minlength=count)
                for k in range(d)
            ]
        )
    if config.compensate:
        # E[endpoint], j=0 jump included.
        drift = walk_mean_jumps(config) * config.law.mean_jump()
        endpoints = endpoints - drift[None, :]
    return endpoints


def sample_walk_endpoint(config: WalkConfig, rng: np.random.Generator) -> FloatArray:
    """One endpoint A(t / gamma^alpha) in R^d (shape (d,)).

    Raises:
        PoissonOverflowError: If the Poisson mean exceeds the configured cap.
    """
    return _walk_block(config, 1, rng)[0]


def config_echo(config: WalkConfig) -> dict[str, Any]:
    """JSON-ready echo of a walk configuration."""
    return config.model_dump(mode="json")


def sample_walk_batch(
    config: WalkConfig,
    threads: int = 1,
    stream: RngStream | None = None,
) -> SampleBatch:
    """Draw config.n walk endpoints.

    Args:
        config: Walk parameters, sample count and seed.
        threads: Worker threads.
        stream: Stream override; defaults to stream 0 of config.seed.

    Returns:
        SampleBatch of shape (n, d), identical for any thread count.
    """
    mean_jumps = walk_mean_jumps(config)
    stream = stream or RngStream(seed=config.seed)
    block = block_size_for(mean_jumps)
    logger.info(
        "Sampling %d walk endpoints (mean jumps %.4g, block %d, threads %d)",
        config.n,
        mean_jumps,
        block,
        threads,
    )
    points = draw_blocks(
        lambda count, rng: _walk_block(config, count, rng),
        config.n,
        stream,
        block,
        threads,
    )
    return SampleBatch(points, config_echo(config))


__all__ = [
    "BLOCK_JUMP_BUDGET",
    "BlockDrawer",
    "block_size_for",
    "config_echo",
    "draw_blocks",
    "sample_walk_batch",
    "sample_walk_endpoint",
]
