"""Validated configuration models."""

from fracwalk.schemas.config import (
    COMMANDS,
    Command,
    Experiment,
    GridParams,
    OutputFormat,
    RunConfig,
)

__all__ = [
    "COMMANDS",
    "Command",
    "Experiment",
    "GridParams",
    "OutputFormat",
    "RunConfig",
]
