"""Tests for the command line: parsing, config files, dispatch and exit codes."""

from __future__ import annotations

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from fracwalk.cli import cli_main, load_config_file, parse_config, run
from fracwalk.commands.base import CommandOutcome
from fracwalk.utils.errors import (
    AcceptanceError,
    ConfigError,
    DomainError,
    HypothesisError,
)


def _write_ini(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


class TestParseConfig:
    """Tests for flag parsing."""

    def test_converge_flags(self) -> None:
        """The documented converge invocation parses to a valid config."""
        config = parse_config(
            [
                "converge",
                "--thm",
                "2",
                "--alpha",
                "1.2",
                "--lambda",
                "1",
                "--t",
                "1",
                "--gammas",
                "0.1,0.01,0.001",
                "--n",
                "200000",
                "--seed",
                "7",
            ]
        )
        assert config.command == "converge"
        assert config.theorem == "thm2"
        assert config.alpha == 1.2
        assert config.lam == 1.0
        assert config.gammas == [0.1, 0.01, 0.001]
        assert (config.n, config.seed) == (200_000, 7)

    def test_thm1_alpha_hypothesis(self) -> None:
        """Theorem 1 rejects alpha = 1.5 before any work is done."""
        with pytest.raises(HypothesisError) as exc_info:
            parse_config(["simulate", "--thm", "1", "--alpha", "1.5"])
        assert exc_info.value.exit_code == 2

    def test_skew_hypothesis(self) -> None:
        """p = 0.7, q = 0.4 violates p + q = 1."""
        with pytest.raises(HypothesisError) as exc_info:
            parse_config(["symbol", "--thm", "1", "--p", "0.7", "--q", "0.4"])
        assert exc_info.value.hypothesis == "p + q = 1"

    def test_unknown_flag(self) -> None:
        """Usage errors become configuration errors."""
        with pytest.raises(ConfigError):
            parse_config(["symbol", "--bogus", "1"])

    def test_range_error_names_field(self) -> None:
        """Out-of-range values report the offending field."""
        with pytest.raises(ConfigError) as exc_info:
            parse_config(["simulate", "--n", "0"])
        assert exc_info.value.field == "n"

    def test_dashed_flags(self) -> None:
        """Dashed flags map to underscored fields."""
        config = parse_config(["operator", "--x-points", "7", "--no-multiplier-check"])
        assert config.x_points == 7
        assert config.multiplier_check is False


class TestConfigFile:
    """Tests for INI config files."""

    def test_sections_and_precedence(self, tmp_path: Path) -> None:
        """[common] then [command]; flags win over both."""
        ini = _write_ini(
            tmp_path / "run.ini",
            "[common]\nseed = 3\nalpha = 0.2\n\n"
            "[symbol]\nalpha = 0.3\nxi_points = 11\nlambda = 2\n",
        )
        config = parse_config(["symbol", "--config", str(ini), "--alpha", "0.4"])
        assert config.seed == 3
        assert config.alpha == 0.4
        assert config.xi_points == 11
        assert config.lam == 2.0

    def test_other_command_sections_ignored(self, tmp_path: Path) -> None:
        """Only the running command's section applies."""
        ini = _write_ini(tmp_path / "run.ini", "[operator]\nalpha = 1.5\n")
        values = load_config_file(ini, "symbol")
        assert values == {}

    def test_list_keys(self, tmp_path: Path) -> None:
        """gammas are parsed from comma lists."""
        ini = _write_ini(tmp_path / "run.ini", "[converge]\ngammas = 0.5, 0.05\n")
        assert load_config_file(ini, "converge") == {"gammas": [0.5, 0.05]}

    def test_unknown_key(self, tmp_path: Path) -> None:
        """Misspelled keys are rejected with their name."""
        ini = _write_ini(tmp_path / "run.ini", "[common]\nalhpa = 0.5\n")
        with pytest.raises(ConfigError) as exc_info:
            load_config_file(ini, "symbol")
        assert exc_info.value.field == "alhpa"

    def test_unknown_section(self, tmp_path: Path) -> None:
        """Sections must name a command or [common]."""
        ini = _write_ini(tmp_path / "run.ini", "[plot]\nalpha = 0.5\n")
        with pytest.raises(ConfigError) as exc_info:
            load_config_file(ini, "symbol")
        assert "plot" in str(exc_info.value)

    def test_malformed_file(self, tmp_path: Path) -> None:
        """Lines outside any section cannot be parsed."""
        ini = _write_ini(tmp_path / "run.ini", "alpha = 0.5\n")
        with pytest.raises(ConfigError) as exc_info:
            load_config_file(ini, "symbol")
        assert exc_info.value.field == "config"

    def test_missing_file(self, tmp_path: Path) -> None:
        """A missing file is a configuration error."""
        with pytest.raises(ConfigError):
            load_config_file(tmp_path / "absent.ini", "symbol")


class TestRun:
    """Tests for dispatch and manifests."""

    def test_symbol_run_is_reproducible(self, tmp_path: Path) -> None:
        """Rerunning a config reproduces every file hash."""
        hashes = []
        for name in ("first", "second"):
            config = parse_config(
                ["symbol", "--xi-points", "11", "--out-dir", str(tmp_path / name)]
            )
            hashes.append(run(config).hashes())
        assert hashes[0] == hashes[1]
        assert list(hashes[0]) == ["symbol.csv"]

    def test_manifest_written(self, tmp_path: Path) -> None:
        """The manifest echoes the config and lists the files."""
        out = tmp_path / "out"
        run(parse_config(["symbol", "--xi-points", "5", "--out-dir", str(out)]))
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["status"] == "success"
        assert manifest["config"]["xi_points"] == 5
        assert "out_dir" not in manifest["config"]
        assert manifest["files"][0]["name"] == "symbol.csv"

    def test_failed_checks_raise(self, tmp_path: Path) -> None:
        """Reported failures become an AcceptanceError after the manifest."""
        out = tmp_path / "out"
        config = parse_config(["verify", "--out-dir", str(out)])
        handlers = {"verify": lambda c, s: CommandOutcome(failures=["bad"])}
        with patch.dict("fracwalk.cli.COMMAND_HANDLERS", handlers):
            with pytest.raises(AcceptanceError) as exc_info:
                run(config)
        assert exc_info.value.checks == ["bad"]
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["status"] == "failed"


class TestCliMain:
    """Tests for cli_main exit codes and stdout documents."""

    def test_success(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Exit 0 with the file hashes on stdout."""
        code = cli_main(
            ["symbol", "--xi-points", "5", "--out-dir", str(tmp_path / "out")]
        )
        document = json.loads(capsys.readouterr().out)
        assert code == 0
        assert document["status"] == "success"
        assert document["command"] == "symbol"
        assert "symbol.csv" in document["data"]["files"]

    def test_hypothesis_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Exit 2 naming the violated hypothesis."""
        code = cli_main(["symbol", "--thm", "1", "--alpha", "1.5"])
        document = json.loads(capsys.readouterr().out)
        assert code == 2
        assert document["error_code"] == "HypothesisError"
        assert document["hypothesis"] == "alpha in (0,1)"
        assert document["exit_code"] == 2

    def test_numerical_error(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Exit 3 when a pipeline raises a numerical error."""

        def failing(config: object, store: object) -> CommandOutcome:
            raise DomainError("alpha outside (0, 2)")

        out = tmp_path / "out"
        with patch.dict("fracwalk.cli.COMMAND_HANDLERS", {"verify": failing}):
            code = cli_main(["verify", "--out-dir", str(out)])
        document = json.loads(capsys.readouterr().out)
        assert code == 3
        assert document["error_code"] == "DomainError"
        assert json.loads((out / "manifest.json").read_text())["status"] == "error"

    def test_acceptance_failure(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Exit 4 listing the failed checks."""
        handlers = {"verify": lambda c, s: CommandOutcome(failures=["final_cf_error"])}
        with patch.dict("fracwalk.cli.COMMAND_HANDLERS", handlers):
            code = cli_main(["verify", "--out-dir", str(tmp_path / "out")])
        document = json.loads(capsys.readouterr().out)
        assert code == 4
        assert document["checks"] == ["final_cf_error"]

    def test_unexpected_error(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Exit 1 for anything that is not a fracwalk error."""

        def broken(config: object, store: object) -> CommandOutcome:
            raise RuntimeError("boom")

        with patch.dict("fracwalk.cli.COMMAND_HANDLERS", {"verify": broken}):
            code = cli_main(["verify", "--out-dir", str(tmp_path / "out")])
        document = json.loads(capsys.readouterr().out)
        assert code == 1
        assert document["error"] == "boom"
