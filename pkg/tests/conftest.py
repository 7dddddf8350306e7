"""Pytest configuration and fixtures for fracwalk tests."""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from fracwalk.artifacts.manifest import RunManifest
from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.middleware.audit_logger import audit_logger
from fracwalk.operators.functions import TestFunction


@pytest.fixture(autouse=True)
def quiet_audit() -> Iterator[None]:
    """Keep audit lines out of the test output."""
    previous = audit_logger.enabled
    audit_logger.set_enabled(False)
    yield
    audit_logger.set_enabled(previous)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for statistical tests."""
    return np.random.default_rng(20240607)


@pytest.fixture
def gaussian() -> TestFunction:
    """Unit Gaussian exp(-x^2) centered at the origin."""
    return TestFunction(family="gaussian", center=(0.0,), width=1.0)


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    """Fresh output directory."""
    return tmp_path / "out"


@pytest.fixture
def store(out_dir: Path) -> ArtifactStore:
    """Artifact store over a fresh output directory."""
    return ArtifactStore(RunManifest(command="symbol", seed=0), out_dir)
