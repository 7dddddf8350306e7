"""The ``symbol`` command: a Fourier symbol tabulated on a frequency grid."""

from __future__ import annotations

import logging

from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.commands.base import CommandOutcome, execute_stage
from fracwalk.schemas.config import RunConfig
from fracwalk.symbols.grid import SymbolSpec, evaluate_symbol_grid, spec_echo

logger = logging.getLogger(__name__)


def symbol_spec(config: RunConfig) -> SymbolSpec:
    """The pre-limit symbol when gamma is set, the limit symbol otherwise."""
    return SymbolSpec(
        theorem=config.theorem,
        alpha=config.alpha,
        lam=config.lam,
        p=config.p,
        q=config.q,
        gamma=config.gamma,
        d=config.d,
    )


def run_symbol(config: RunConfig, store: ArtifactStore) -> CommandOutcome:
    """Evaluate Phi on the frequency grid and write ``symbol.csv``/``.json``.

    The JSON document also carries the characteristic function exp(-t Phi)
    and the Hermitian gap max |Phi(-xi) - conj Phi(xi)|.
    """
    spec = symbol_spec(config)
    grid = config.xi_grid(spec.dimension)
    params = {**spec_echo(spec), "points": len(grid)}
    timings = store.manifest.stage_timings_ms

    table = execute_stage(
        "evaluate_symbol_grid",
        params,
        lambda: evaluate_symbol_grid(spec, grid),
        timings,
    )
    gap = table.hermitian_gap()
    cf = table.characteristic_function(config.t)
    logger.info(
        "%s symbol (%s) on %d points, hermitian gap %.3g",
        spec.theorem,
        "limit" if spec.is_limit else f"gamma={spec.gamma:g}",
        len(grid),
        gap,
    )

    payload = {
        "spec": spec_echo(spec),
        "t": config.t,
        "hermitian_gap": gap,
        "xi": table.points,
        "phi": [[z.real, z.imag] for z in table.values],
        "cf": [[z.real, z.imag] for z in cf],
    }
    store.write("symbol", config.format, table.to_rows(), table.header(), payload)
    return CommandOutcome(
        summary={"points": len(grid), "hermitian_gap": gap, "limit": spec.is_limit}
    )


__all__ = ["run_symbol", "symbol_spec"]
