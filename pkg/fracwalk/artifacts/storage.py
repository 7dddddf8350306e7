"""Output directory handling for run artifacts.

Storage location: $FRACWALK_OUT_DIR, or ./fracwalk-out when unset. Each
written file is hashed and recorded on the run manifest, which is written
last as ``manifest.json``.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from fracwalk.artifacts.manifest import ArtifactRecord, RunManifest
from fracwalk.artifacts.writers import file_sha256, write_csv, write_json
from fracwalk.numerics.grids import FloatArray
from fracwalk.utils.errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_OUT_DIR = "fracwalk-out"
MANIFEST_NAME = "manifest.json"


def get_output_dir(override: Path | None = None) -> Path:
    """Resolve the output directory.

    An explicit override wins, then FRACWALK_OUT_DIR, then ./fracwalk-out.
    """
    if override is not None:
        return Path(override).expanduser().resolve()
    custom_path = os.getenv("FRACWALK_OUT_DIR")
    if custom_path:
        return Path(custom_path).expanduser().resolve()
    return Path.cwd() / DEFAULT_OUT_DIR


class ArtifactStore:
    """Writes CSV and JSON artifacts into one directory and tracks their hashes.

    Attributes:
        base_dir: Directory receiving every file of the run.
        manifest: Manifest collecting one record per written file.

    Example:
        >>> store = ArtifactStore(manifest, Path("out"))
        >>> store.write_table("symbol", rows, ["xi", "re_phi", "im_phi"])
        >>> store.finalize()
    """

    def __init__(self, manifest: RunManifest, base_dir: Path | None = None) -> None:
        self.base_dir = get_output_dir(base_dir)
        self.manifest = manifest
        try:
            self.base_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ConfigError(
                f"Cannot create output directory {self.base_dir}: {e}",
                field="out_dir",
            ) from e
        logger.info("Writing artifacts to %s", self.base_dir)

    def path(self, name: str) -> Path:
        """Path of an artifact, restricted to the output directory.

        Raises:
            ConfigError: If the name is empty after sanitizing or escapes
                the output directory.
        """
        safe_name = "".join(c for c in name if c.isalnum() or c in "-_.")
        if not safe_name or safe_name.startswith("."):
            raise ConfigError(f"Invalid artifact name: {name!r}", field="out_dir")
        path = self.base_dir / safe_name
        if not path.resolve().is_relative_to(self.base_dir.resolve()):
            raise ConfigError(f"Artifact escapes output directory: {name!r}")
        return path

    def _record(self, path: Path, kind: str) -> ArtifactRecord:
        artifact = ArtifactRecord(
            name=path.name,
            kind=kind,
            sha256=file_sha256(path),
            size=path.stat().st_size,
        )
        self.manifest.record(artifact)
        return artifact

    def write_table(
        self, stem: str, rows: FloatArray, header: Sequence[str]
    ) -> ArtifactRecord:
        path = self.path(f"{stem}.csv")
        try:
            write_csv(path, rows, header, manifest=MANIFEST_NAME)
        except OSError as e:
            raise ConfigError(f"Cannot write {path}: {e}", field="out_dir") from e
        return self._record(path, "csv")

    def write_document(self, stem: str, payload: Any) -> ArtifactRecord:
        path = self.path(f"{stem}.json")
        document = {**payload, "manifest": MANIFEST_NAME}
        try:
            write_json(path, document)
        except OSError as e:
            raise ConfigError(f"Cannot write {path}: {e}", field="out_dir") from e
        return self._record(path, "json")

    def write(
        self,
        stem: str,
        fmt: str,
        rows: FloatArray,
        header: Sequence[str],
        payload: dict[str, Any],
    ) -> list[ArtifactRecord]:
        """Write a table, a document or both, following the output format."""
        written: list[ArtifactRecord] = []
        if fmt in ("csv", "both"):
            written.append(self.write_table(stem, rows, header))
        if fmt in ("json", "both"):
            written.append(self.write_document(stem, payload))
        return written

    def finalize(self) -> Path:
        """Write the manifest itself; it is not listed among its own files."""
        path = self.path(MANIFEST_NAME)
        write_json(path, self.manifest.model_dump(mode="json"))
        logger.info(
            "Manifest with %d files written to %s", len(self.manifest.files), path
        )
        return path


__all__ = ["ArtifactStore", "DEFAULT_OUT_DIR", "MANIFEST_NAME", "get_output_dir"]
