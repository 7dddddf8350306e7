"""Command-line surface: argument parsing, config files and dispatch.

Usage:
    fracwalk converge --thm 2 --alpha 1.2 --lambda 1 --t 1 \\
        --gammas 0.1,0.01,0.001 --n 200000 --seed 7

Config files are INI documents with a ``[common]`` section and one section
per command. Keys mirror the long flags with dashes replaced by
underscores (``--xi-points`` <-> ``xi_points``); a flag given on the command
line overrides the file.
"""

from __future__ import annotations

import argparse
import configparser
import logging
import time
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from pydantic import ValidationError

from fracwalk import __version__
from fracwalk.artifacts.manifest import RunManifest
from fracwalk.artifacts.storage import ArtifactStore
from fracwalk.artifacts.writers import dumps
from fracwalk.commands import COMMAND_HANDLERS
from fracwalk.commands.base import build_error_response, build_success_response
from fracwalk.middleware.audit_logger import audit_logger
from fracwalk.middleware.validator import parse_float_list
from fracwalk.operators.results import OPERATOR_NAMES
from fracwalk.schemas.config import COMMANDS, RunConfig
from fracwalk.utils.errors import AcceptanceError, ConfigError, FracWalkError

logger = logging.getLogger(__name__)

# Flag and file keys that differ from RunConfig field names.
KEY_ALIASES = {"thm": "theorem", "lambda": "lam"}
LIST_KEYS = frozenset({"gammas", "h_list"})
FIELD_NAMES = frozenset(RunConfig.model_fields) - {"command"}


# =============================================================================
# Argument Parser
# =============================================================================


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigError."""

    def error(self, message: str) -> NoReturn:
        raise ConfigError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    parent = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    parent.add_argument("--config", type=Path, help="INI config file")
    parent.add_argument("--seed", type=int, help="Master seed")
    parent.add_argument("--out-dir", type=Path, help="Output directory")
    parent.add_argument("--format", choices=("csv", "json", "both"))
    parent.add_argument("--threads", type=int, help="Worker threads")
    return parent


def _index_flags() -> argparse.ArgumentParser:
    parent = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    parent.add_argument("--alpha", type=float, help="Index alpha")
    parent.add_argument("--d", type=int, help="Dimension")
    return parent


def _walk_flags() -> argparse.ArgumentParser:
    parent = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    parent.add_argument("--thm", help="Theorem: 1, 2 or 3")
    parent.add_argument("--lambda", type=float, help="Poisson rate")
    parent.add_argument("--t", type=float, help="Time horizon")
    parent.add_argument("--gamma", type=float, help="Truncation level")
    parent.add_argument("--gammas", help="Comma-separated decreasing gammas")
    parent.add_argument("--n", type=int, help="Samples per batch")
    parent.add_argument("--p", type=float, help="Probability of a positive sign")
    parent.add_argument("--q", type=float, help="Probability of a negative sign")
    parent.add_argument("--level", type=float, help="KS confidence level")
    parent.add_argument("--xi-points", type=int, help="Frequency grid size")
    parent.add_argument("--xi-extent", type=float, help="Frequency half-width")
    return parent


def _function_flags() -> argparse.ArgumentParser:
    parent = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    parent.add_argument("--operator", choices=OPERATOR_NAMES)
    parent.add_argument("--order", type=float, help="Operator order")
    parent.add_argument(
        "--family",
        choices=(
            "gaussian",
            "modulated_gaussian",
            "cosine",
            "constant",
            "linear",
            "quadratic",
        ),
    )
    parent.add_argument("--width", type=float, help="Test function width")
    parent.add_argument("--frequency", type=float, help="Modulation frequency")
    parent.add_argument("--center", type=float, help="Test function center")
    parent.add_argument("--x-points", type=int, help="Evaluation grid size")
    parent.add_argument("--x-extent", type=float, help="Evaluation half-width")
    parent.add_argument(
        "--no-multiplier-check",
        dest="multiplier_check",
        action="store_false",
        help="Skip the Fourier multiplier comparison",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    """The ``fracwalk`` parser with one subcommand per pipeline."""
    parser = _Parser(
        prog="fracwalk",
        description="Compound Poisson walks, stable limits and fractional operators.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    common, index, walk, function = (
        _common_flags(),
        _index_flags(),
        _walk_flags(),
        _function_flags(),
    )
    commands.add_parser(
        "symbol", parents=[common, index, walk], help="Tabulate a Fourier symbol"
    )
    commands.add_parser(
        "simulate", parents=[common, index, walk], help="Sample walk endpoints"
    )
    converge = commands.add_parser(
        "converge",
        parents=[common, index, walk, function],
        help="Gamma sweep or generator-limit experiment",
    )
    converge.add_argument("--experiment", choices=("sweep", "generator"))
    converge.add_argument("--h-list", help="Comma-separated decreasing time steps")
    converge.add_argument("--x", type=float, help="Generator evaluation point")
    commands.add_parser(
        "operator",
        parents=[common, index, function],
        help="Apply a fractional operator to a test function",
    )
    commands.add_parser("verify", parents=[common], help="Run the identity checks")
    return parser


# =============================================================================
# Configuration
# =============================================================================


def _normalize_keys(values: dict[str, Any], source: str) -> dict[str, Any]:
    """Map flag/file keys to RunConfig fields and parse number lists."""
    normalized: dict[str, Any] = {}
    for raw_key, value in values.items():
        key = raw_key.strip().lower().replace("-", "_")
        key = KEY_ALIASES.get(key, key)
        if key not in FIELD_NAMES:
            raise ConfigError(f"Unknown key '{raw_key}' in {source}", field=raw_key)
        if key in LIST_KEYS and isinstance(value, str):
            value = parse_float_list(value, key)
        normalized[key] = value
    return normalized


def load_config_file(path: Path, command: str) -> dict[str, Any]:
    """Read the ``[common]`` and ``[<command>]`` sections of an INI file.

    Raises:
        ConfigError: If the file is missing or malformed, with the line
            number when the parser reports one.
    """
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}", field="config")
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read(path, encoding="utf-8")
    except configparser.Error as e:
        lineno = getattr(e, "lineno", None)
        where = f"{path}:{lineno}" if lineno is not None else str(path)
        raise ConfigError(
            f"Cannot parse config {where}: {e.message}",
            field="config",
            details={"line": lineno},
        ) from e
    unknown = [s for s in parser.sections() if s not in ("common", *COMMANDS)]
    if unknown:
        raise ConfigError(f"Unknown config sections: {unknown}", field="config")

    values: dict[str, Any] = {}
    for section in ("common", command):
        if parser.has_section(section):
            values.update(
                _normalize_keys(dict(parser.items(section)), f"{path} [{section}]")
            )
    logger.debug("Loaded %d keys from %s", len(values), path)
    return values


def _validation_error(e: ValidationError) -> ConfigError:
    first = e.errors()[0]
    field = ".".join(str(part) for part in first["loc"]) or None
    return ConfigError(
        f"Invalid value for {field}: {first['msg']}",
        field=field,
        details={"errors": len(e.errors())},
    )


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Build a validated RunConfig from flags and an optional config file.

    Raises:
        ConfigError: On unknown flags or keys, unparseable files and values
            outside their ranges.
        HypothesisError: If a theorem's hypotheses are violated.
    """
    namespace = vars(build_parser().parse_args(argv))
    command = namespace.pop("command")
    config_path = namespace.pop("config", None)

    values: dict[str, Any] = {}
    if config_path is not None:
        values.update(load_config_file(config_path, command))
    values.update(_normalize_keys(namespace, "flags"))
    try:
        return RunConfig(command=command, **values)
    except ValidationError as e:
        raise _validation_error(e) from e


# =============================================================================
# Dispatch
# =============================================================================


def run(config: RunConfig) -> RunManifest:
    """Dispatch to the command's pipeline and write its manifest.

    Returns:
        The finished manifest.

    Raises:
        FracWalkError: Propagated from the pipeline; the manifest is still
            written with status "error".
        AcceptanceError: If the command reports failed checks.
    """
    handler = COMMAND_HANDLERS[config.command]
    audit_logger.set_command(config.command)
    manifest = RunManifest(
        command=config.command, seed=config.seed, config=config.echo()
    )
    store = ArtifactStore(manifest, config.out_dir)
    started = time.perf_counter()
    logger.info("Running %s (seed %d)", config.command, config.seed)

    try:
        outcome = handler(config, store)
    except FracWalkError:
        manifest.finish("error", (time.perf_counter() - started) * 1000)
        store.finalize()
        raise

    manifest.summary = outcome.summary
    status = "success" if outcome.passed else "failed"
    manifest.finish(status, (time.perf_counter() - started) * 1000)
    manifest_path = store.finalize()
    if not outcome.passed:
        raise AcceptanceError(
            f"{config.command}: {len(outcome.failures)} check(s) failed",
            checks=outcome.failures,
            details={"manifest": str(manifest_path), "summary": outcome.summary},
        )
    return manifest


def error_document(e: FracWalkError) -> dict[str, Any]:
    """Machine-readable rendering of a failure."""
    extra: dict[str, Any] = {"exit_code": e.exit_code}
    for attr in ("field", "hypothesis", "checks"):
        value = getattr(e, attr, None)
        if value:
            extra[attr] = value
    if e.details:
        extra["details"] = e.details
    return build_error_response(e.message, type(e).__name__, extra)


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Parse, run and print one JSON document on stdout.

    Returns:
        Exit code: 0 success, 2 configuration, 3 numerical failure,
        4 acceptance failure, 1 anything unexpected.
    """
    try:
        config = parse_config(argv)
        manifest = run(config)
    except FracWalkError as e:
        logger.error("%s: %s", type(e).__name__, e)
        print(dumps(error_document(e)), end="")
        return e.exit_code
    except Exception as e:
        logger.exception("Unexpected failure")
        print(dumps(build_error_response(str(e), type(e).__name__)), end="")
        return 1

    data = {"summary": manifest.summary, "files": manifest.hashes()}
    print(dumps(build_success_response(config.command, data)), end="")
    return 0


__all__ = [
    "KEY_ALIASES",
    "build_parser",
    "cli_main",
    "error_document",
    "load_config_file",
    "parse_config",
    "run",
]
