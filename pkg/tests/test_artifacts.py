"""Tests for CSV/JSON writers, the artifact store and run manifests."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest

from fracwalk.artifacts.manifest import ArtifactRecord, RunManifest
from fracwalk.artifacts.storage import (
    DEFAULT_OUT_DIR,
    MANIFEST_NAME,
    ArtifactStore,
    get_output_dir,
)
from fracwalk.artifacts.writers import dumps, file_sha256, jsonable, write_csv
from fracwalk.utils.errors import ConfigError, ShapeMismatchError


class TestWriters:
    """Tests for the byte-stable writers."""

    def test_csv_header_and_digits(self, tmp_path: Path) -> None:
        """Header first, 17 significant digits, no comment marker."""
        path = tmp_path / "table.csv"
        write_csv(path, np.array([[0.1, 1.0 / 3.0]]), ["xi", "value"])
        lines = path.read_text().splitlines()
        assert lines[0] == "xi,value"
        assert lines[1] == "0.10000000000000001,0.33333333333333331"
        first = [float(v) for v in lines[1].split(",")]
        assert first == [0.1, 1.0 / 3.0]

    def test_csv_manifest_line(self, tmp_path: Path) -> None:
        """A manifest name becomes a comment line above the header."""
        path = tmp_path / "table.csv"
        write_csv(path, np.array([[1.0, 2.0]]), ["xi", "value"], manifest="run.json")
        assert path.read_text().splitlines() == [
            "# manifest: run.json",
            "xi,value",
            "1,2",
        ]

    def test_csv_column_mismatch(self, tmp_path: Path) -> None:
        """Header and rows must agree on the column count."""
        with pytest.raises(ShapeMismatchError) as exc_info:
            write_csv(tmp_path / "bad.csv", np.zeros((2, 3)), ["a", "b"])
        assert "3 columns but 2 header names" in str(exc_info.value)

    def test_jsonable(self) -> None:
        """numpy values become plain types, non-finite floats None."""
        payload = {
            "array": np.array([1.0, math.nan]),
            "scalar": np.float64(2.5),
            "z": 1 + 2j,
            "path": Path("a/b"),
        }
        assert jsonable(payload) == {
            "array": [1.0, None],
            "scalar": 2.5,
            "z": [1.0, 2.0],
            "path": "a/b",
        }

    def test_dumps_is_canonical(self) -> None:
        """Key order does not change the text."""
        assert dumps({"b": 1, "a": 2}) == dumps({"a": 2, "b": 1})
        assert dumps({"a": 1}).endswith("}\n")

    def test_sha256(self, tmp_path: Path) -> None:
        """Digest of a known byte string."""
        path = tmp_path / "abc.txt"
        path.write_bytes(b"abc")
        assert file_sha256(path) == (
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        )


class TestArtifactStore:
    """Tests for ArtifactStore."""

    def test_write_table_records_hash(
        self, store: ArtifactStore, out_dir: Path
    ) -> None:
        """Each file is hashed onto the manifest."""
        record = store.write_table("symbol", np.ones((2, 3)), ["xi", "re", "im"])
        assert record.kind == "csv"
        assert record.sha256 == file_sha256(out_dir / "symbol.csv")
        assert store.manifest.hashes() == {"symbol.csv": record.sha256}

    def test_tables_reference_manifest(
        self, store: ArtifactStore, out_dir: Path
    ) -> None:
        """CSV artifacts name manifest.json on their first line."""
        store.write_table("symbol", np.ones((1, 2)), ["xi", "re"])
        lines = (out_dir / "symbol.csv").read_text().splitlines()
        assert lines[:2] == [f"# manifest: {MANIFEST_NAME}", "xi,re"]

    def test_documents_reference_manifest(
        self, store: ArtifactStore, out_dir: Path
    ) -> None:
        """JSON artifacts point at manifest.json."""
        store.write_document("verify", {"checks": []})
        document = json.loads((out_dir / "verify.json").read_text())
        assert document == {"checks": [], "manifest": MANIFEST_NAME}

    def test_write_both_formats(self, store: ArtifactStore) -> None:
        """format=both writes a table and a document."""
        written = store.write("ecf", "both", np.zeros((1, 2)), ["a", "b"], {"n": 1})
        assert [r.name for r in written] == ["ecf.csv", "ecf.json"]

    def test_rewrite_replaces_record(self, store: ArtifactStore) -> None:
        """Writing a stem twice keeps one manifest entry."""
        store.write_table("symbol", np.zeros((1, 1)), ["xi"])
        store.write_table("symbol", np.ones((1, 1)), ["xi"])
        assert len(store.manifest.files) == 1

    def test_finalize(self, store: ArtifactStore) -> None:
        """The manifest lists the files but not itself."""
        store.write_table("symbol", np.zeros((1, 1)), ["xi"])
        path = store.finalize()
        assert path == store.base_dir / MANIFEST_NAME
        manifest = json.loads(path.read_text())
        assert [f["name"] for f in manifest["files"]] == ["symbol.csv"]
        assert manifest["command"] == "symbol"

    @pytest.mark.parametrize("name", ["", "../..", ".hidden", "///"])
    def test_rejects_unsafe_names(self, store: ArtifactStore, name: str) -> None:
        """Names that sanitize to nothing or a dotfile are refused."""
        with pytest.raises(ConfigError):
            store.path(name)

    def test_sanitizes_separators(self, store: ArtifactStore) -> None:
        """Path separators are stripped, keeping files in the directory."""
        assert store.path("a/b.csv") == store.base_dir / "ab.csv"


class TestOutputDir:
    """Tests for get_output_dir."""

    def test_override_wins(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """An explicit directory beats the environment."""
        monkeypatch.setenv("FRACWALK_OUT_DIR", str(tmp_path / "env"))
        assert get_output_dir(tmp_path / "flag") == (tmp_path / "flag").resolve()

    def test_environment(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """FRACWALK_OUT_DIR is used when no override is given."""
        monkeypatch.setenv("FRACWALK_OUT_DIR", str(tmp_path / "env"))
        assert get_output_dir() == (tmp_path / "env").resolve()

    def test_default(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """Without either, ./fracwalk-out."""
        monkeypatch.delenv("FRACWALK_OUT_DIR", raising=False)
        monkeypatch.chdir(tmp_path)
        assert get_output_dir() == Path.cwd() / DEFAULT_OUT_DIR


class TestRunManifest:
    """Tests for RunManifest."""

    def test_finish(self) -> None:
        """Finishing stamps status, duration and end time."""
        manifest = RunManifest(command="verify", seed=1)
        assert manifest.status == "running"
        manifest.finish("success", 12.5)
        assert manifest.status == "success"
        assert manifest.duration_ms == 12.5
        assert manifest.finished_at is not None

    def test_record_validates_digest(self) -> None:
        """Digests are 64 hex characters."""
        with pytest.raises(ValueError):
            ArtifactRecord(name="a.csv", kind="csv", sha256="abc", size=1)
