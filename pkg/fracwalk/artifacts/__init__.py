"""Artifact writing and run provenance."""

from fracwalk.artifacts.manifest import ArtifactRecord, RunManifest, utc_now
from fracwalk.artifacts.storage import (
    DEFAULT_OUT_DIR,
    MANIFEST_NAME,
    ArtifactStore,
    get_output_dir,
)
from fracwalk.artifacts.writers import (
    CSV_FORMAT,
    dumps,
    file_sha256,
    jsonable,
    write_csv,
    write_json,
)

__all__ = [
    # Manifest
    "ArtifactRecord",
    "RunManifest",
    "utc_now",
    # Storage
    "ArtifactStore",
    "DEFAULT_OUT_DIR",
    "MANIFEST_NAME",
    "get_output_dir",
    # Writers
    "CSV_FORMAT",
    "dumps",
    "file_sha256",
    "jsonable",
    "write_csv",
    "write_json",
]
