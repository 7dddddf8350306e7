"""Tests for parameter validation and audit logging."""

from __future__ import annotations

import json

import pytest

from fracwalk.middleware.audit_logger import AuditEntry, AuditLogger
from fracwalk.middleware.validator import (
    normalize_theorem,
    parse_float_list,
    validate_dimension,
    validate_gamma_list,
    validate_skew,
    validate_theorem_hypotheses,
)
from fracwalk.utils.errors import ConfigError, HypothesisError


class TestNormalizeTheorem:
    """Tests for theorem tags."""

    @pytest.mark.parametrize("tag", ["1", 1, "thm1", "Thm1", " THM1 "])
    def test_accepts_aliases(self, tag: str | int) -> None:
        """Numbers and tags in any case map to the canonical tag."""
        assert normalize_theorem(tag) == "thm1"

    def test_rejects_unknown(self) -> None:
        """Only three theorems exist."""
        with pytest.raises(ConfigError) as exc_info:
            normalize_theorem("4")
        assert exc_info.value.field == "thm"


class TestValidateSkew:
    """Tests for the sign weights."""

    def test_accepts_complementary_weights(self) -> None:
        """p + q = 1 passes through."""
        assert validate_skew(0.7, 0.3) == (0.7, 0.3)

    def test_rejects_sum_other_than_one(self) -> None:
        """p = 0.7, q = 0.4 violates p + q = 1."""
        with pytest.raises(HypothesisError) as exc_info:
            validate_skew(0.7, 0.4)
        assert exc_info.value.hypothesis == "p + q = 1"
        assert exc_info.value.exit_code == 2

    def test_rejects_negative_weight(self) -> None:
        """Weights are probabilities."""
        with pytest.raises(HypothesisError) as exc_info:
            validate_skew(-0.1, 1.1)
        assert exc_info.value.field == "p"


class TestTheoremHypotheses:
    """Tests for validate_theorem_hypotheses."""

    def test_thm1_alpha_range(self) -> None:
        """Theorem 1 with alpha = 1.5 names the violated range."""
        with pytest.raises(HypothesisError) as exc_info:
            validate_theorem_hypotheses("1", 1.5)
        assert exc_info.value.hypothesis == "alpha in (0,1)"
        assert "alpha=1.5" in str(exc_info.value)

    def test_thm2_accepts_alpha_above_one(self) -> None:
        """Theorem 2 allows alpha in (0, 2)."""
        assert validate_theorem_hypotheses("thm2", 1.5) == "thm2"

    def test_thm2_requires_symmetry(self) -> None:
        """Theorem 2 needs p = q."""
        with pytest.raises(HypothesisError) as exc_info:
            validate_theorem_hypotheses("thm2", 0.5, 0.8, 0.2)
        assert exc_info.value.hypothesis == "p = q = 1/2"

    def test_thm3_dimension(self) -> None:
        """Theorem 3 caps the dimension at three."""
        with pytest.raises(HypothesisError):
            validate_theorem_hypotheses("thm3", 0.5, d=4)
        assert validate_dimension(3) == 3

    def test_non_finite_alpha(self) -> None:
        """NaN never lies in a range."""
        with pytest.raises(HypothesisError):
            validate_theorem_hypotheses("thm2", float("nan"))


class TestGammaList:
    """Tests for gamma sweeps and number lists."""

    def test_accepts_decreasing(self) -> None:
        """A strictly decreasing positive list is returned as floats."""
        assert validate_gamma_list([0.1, 0.01]) == [0.1, 0.01]

    @pytest.mark.parametrize(
        "gammas", [[], [0.1, 0.1], [0.01, 0.1], [0.1, -0.01], [0.1, float("inf")]]
    )
    def test_rejects_invalid(self, gammas: list[float]) -> None:
        """Empty, repeated, increasing or nonpositive lists are rejected."""
        with pytest.raises(ConfigError) as exc_info:
            validate_gamma_list(gammas)
        assert exc_info.value.field == "gammas"

    def test_parse_float_list(self) -> None:
        """Comma lists tolerate spaces and a trailing comma."""
        assert parse_float_list("0.1, 0.01,0.001,", "gammas") == [0.1, 0.01, 0.001]

    def test_parse_float_list_rejects_words(self) -> None:
        """Non-numbers name the field."""
        with pytest.raises(ConfigError) as exc_info:
            parse_float_list("0.1,abc", "h_list")
        assert exc_info.value.field == "h_list"


class TestAuditLogger:
    """Tests for AuditLogger."""

    def test_writes_json_line_to_stderr(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """One JSON object per stage, on stderr only."""
        logger = AuditLogger(enabled=True)
        logger.set_command("symbol")
        logger.log_stage("evaluate_symbol_grid", {"alpha": 0.5}, "success")
        captured = capsys.readouterr()
        assert captured.out == ""
        entry = json.loads(captured.err.strip())["audit"]
        assert entry["command"] == "symbol"
        assert entry["stage"] == "evaluate_symbol_grid"
        assert entry["parameters"] == {"alpha": 0.5}

    def test_summarizes_long_lists(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Long lists collapse to a count."""
        logger = AuditLogger(enabled=True)
        logger.log_stage("run_sweep", {"gammas": list(range(40))})
        entry = json.loads(capsys.readouterr().err.strip())["audit"]
        assert entry["parameters"]["gammas"] == "[40 items]"

    def test_disabled_logger_is_silent(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Nothing is written when disabled."""
        logger = AuditLogger(enabled=False)
        logger.log(AuditEntry(stage="verify"))
        assert capsys.readouterr().err == ""
