"""CSV and JSON writers with byte-stable output.

CSV rows use 17 significant digits so doubles round-trip exactly, a
mandatory header line and "\\n" line endings. Tables written for a run
open with a "# manifest: <name>" comment line ahead of the header. JSON
documents are written with sorted keys; NaN and infinities become null.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from fracwalk.numerics.grids import FloatArray
from fracwalk.utils.errors import ShapeMismatchError

logger = logging.getLogger(__name__)

CSV_FORMAT = "%.17g"


def _header_text(header: Sequence[str], manifest: str | None) -> str:
    names = ",".join(header)
    return names if manifest is None else f"# manifest: {manifest}\n{names}"


def write_csv(
    path: Path,
    rows: FloatArray,
    header: Sequence[str],
    manifest: str | None = None,
) -> None:
    """Write a 2-d array as comma-separated text under a header row.

    When ``manifest`` is given, a "# manifest: <name>" comment line precedes
    the header.

    Raises:
        ShapeMismatchError: If the column count differs from the header.
    """
    table = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    if table.size and table.shape[1] != len(header):
        raise ShapeMismatchError(
            f"{path.name}: {table.shape[1]} columns but {len(header)} header names"
        )
    np.savetxt(
        path,
        table,
        fmt=CSV_FORMAT,
        delimiter=",",
        newline="\n",
        header=_header_text(header, manifest),
        comments="",
    )
    logger.debug("Wrote %d rows to %s", table.shape[0], path)


def jsonable(value: Any) -> Any:
    """Recursively convert numpy values to JSON types, non-finite floats to None."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, np.generic):
        return jsonable(value.item())
    if isinstance(value, complex):
        return [jsonable(value.real), jsonable(value.imag)]
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, Path):
        return value.as_posix()
    return value


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    text = json.dumps(jsonable(payload), sort_keys=True, indent=2, allow_nan=False)
    return text + "\n"


def write_json(path: Path, payload: Any) -> None:
    path.write_text(dumps(payload), encoding="utf-8", newline="\n")
    logger.debug("Wrote %s", path)


def file_sha256(path: Path) -> str:
    """Hex SHA-256 digest of a file's bytes."""
    digest = hashlib.sha256()
    with path.open("rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


__all__ = [
    "CSV_FORMAT",
    "dumps",
    "file_sha256",
    "jsonable",
    "write_csv",
    "write_json",
]
