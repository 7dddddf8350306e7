"""Fixtures for command tests."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any
from unittest.mock import MagicMock, patch

import pytest

from fracwalk.artifacts.manifest import RunManifest
from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.schemas.config import RunConfig


@pytest.fixture
def mock_audit_logger() -> Iterator[MagicMock]:
    """Mock audit_logger.log_stage()."""
    with patch("fracwalk.commands.base.audit_logger") as mock:
        yield mock


@pytest.fixture
def make_config(out_dir: Path) -> Callable[..., RunConfig]:
    """RunConfig factory writing into the test's output directory."""

    def factory(command: str, **values: Any) -> RunConfig:
        return RunConfig(command=command, out_dir=out_dir, **values)

    return factory


@pytest.fixture
def make_store(out_dir: Path) -> Callable[[RunConfig], ArtifactStore]:
    """Artifact store with a manifest for the given config."""

    def factory(config: RunConfig) -> ArtifactStore:
        manifest = RunManifest(
            command=config.command, seed=config.seed, config=config.echo()
        )
        return ArtifactStore(manifest, out_dir)

    return factory
