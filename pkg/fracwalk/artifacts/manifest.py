"""Run manifests: config echo, emitted files with hashes, timings."""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Any

from pydantic import BaseModel, Field

from fracwalk import __version__

UTC = timezone.utc


def utc_now() -> str:
    return datetime.now(UTC).isoformat()


class ArtifactRecord(BaseModel):
    """One emitted file."""

    name: str = Field(..., description="File name relative to the output directory")
    kind: str = Field(..., description="csv or json")
    sha256: str = Field(..., min_length=64, max_length=64, description="Hex digest")
    size: int = Field(..., ge=0, description="Size in bytes")


class RunManifest(BaseModel):
    """Provenance of one command run.

    Data files carry no timestamps, so rerunning a config with the same seed
    and version reproduces every ``files`` hash. Everything time-dependent
    lives here.
    """

    command: str = Field(..., description="Command that ran")
    version: str = Field(default=__version__, description="fracwalk version")
    seed: int = Field(..., ge=0, description="Master seed")
    config: dict[str, Any] = Field(default_factory=dict, description="Config echo")
    started_at: str = Field(default_factory=utc_now, description="ISO timestamp")
    finished_at: str | None = Field(default=None, description="ISO timestamp")
    duration_ms: float | None = Field(default=None, ge=0)
    stage_timings_ms: dict[str, float] = Field(
        default_factory=dict, description="Wall time per pipeline stage"
    )
    status: str = Field(default="running", description="success, failed or error")
    summary: dict[str, Any] = Field(
        default_factory=dict, description="Headline numbers of the run"
    )
    files: list[ArtifactRecord] = Field(default_factory=list)

    def record(self, artifact: ArtifactRecord) -> None:
        """Add or replace the entry of one file."""
        self.files = [f for f in self.files if f.name != artifact.name]
        self.files.append(artifact)

    def finish(self, status: str, duration_ms: float) -> None:
        self.status = status
        self.duration_ms = duration_ms
        self.finished_at = utc_now()

    def hashes(self) -> dict[str, str]:
        """File name to SHA-256 digest."""
        return {f.name: f.sha256 for f in self.files}


__all__ = ["ArtifactRecord", "RunManifest", "utc_now"]
