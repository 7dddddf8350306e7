"""Deterministic, independent random number streams.

A stream is addressed by (seed, stream index, sub-stream path). Streams map
onto numpy ``SeedSequence`` spawn keys, so distinct addresses give
statistically independent PCG64 generators and identical addresses replay
the same draws bit for bit, whatever thread consumes them.
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class RngStream(BaseModel):
    """Address of one random number stream."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(..., ge=0, lt=2**64, description="Master seed")
    stream: int = Field(default=0, ge=0, description="Stream index")
    path: tuple[int, ...] = Field(
        default=(), description="Sub-stream indices below the stream"
    )

    def child(self, index: int) -> RngStream:
        """Address of sub-stream ``index`` below this stream."""
        return self.model_copy(update={"path": (*self.path, index)})

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        sequence = np.random.SeedSequence(
            entropy=self.seed, spawn_key=(self.stream, *self.path)
        )
        return np.random.Generator(np.random.PCG64(sequence))


__all__ = ["RngStream"]
