"""fracwalk commands.

Each command takes a validated RunConfig and an ArtifactStore, writes its
artifacts and returns a CommandOutcome.
"""

from collections.abc import Callable

from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.commands.base import (
    CommandOutcome,
    ResponseKeys,
    build_error_response,
    build_success_response,
    compute_params_hash,
    execute_stage,
)
from fracwalk.commands.converge import run_converge
from fracwalk.commands.operator import run_operator
from fracwalk.commands.simulate import run_simulate
from fracwalk.commands.symbol import run_symbol
from fracwalk.commands.verify import run_verify
from fracwalk.schemas.config import RunConfig

CommandHandler = Callable[[RunConfig, ArtifactStore], CommandOutcome]

COMMAND_HANDLERS: dict[str, CommandHandler] = {
    "symbol": run_symbol,
    "simulate": run_simulate,
    "converge": run_converge,
    "operator": run_operator,
    "verify": run_verify,
}

__all__ = [
    # Base
    "CommandOutcome",
    "ResponseKeys",
    "build_error_response",
    "build_success_response",
    "compute_params_hash",
    "execute_stage",
    # Commands
    "COMMAND_HANDLERS",
    "CommandHandler",
    "run_converge",
    "run_operator",
    "run_simulate",
    "run_symbol",
    "run_verify",
]
