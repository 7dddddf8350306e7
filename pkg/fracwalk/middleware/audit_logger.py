"""Audit logging of pipeline stages."""

from __future__ import annotations

import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Any

from pydantic import BaseModel, Field

UTC = timezone.utc

logger = logging.getLogger(__name__)


class AuditEntry(BaseModel):
    """Model for an audit log entry."""

    timestamp: str = Field(
        default_factory=lambda: datetime.now(UTC).isoformat(),
        description="ISO format timestamp",
    )
    command: str = Field(default="library", description="CLI command")
    stage: str = Field(..., description="Name of the pipeline stage")
    parameters: dict[str, Any] = Field(
        default_factory=dict,
        description="Stage parameters (arrays summarized)",
    )
    result_status: str | None = Field(
        default=None,
        description="Result status (success/error)",
    )
    error_message: str | None = Field(
        default=None,
        description="Error message if failed",
    )
    duration_ms: float | None = Field(
        default=None,
        description="Execution duration in milliseconds",
    )


class AuditLogger:
    """Audit logger that writes one JSON line per stage to stderr.

    stdout carries the command result, so audit lines never mix with it.
    """

    MAX_LIST_ITEMS = 16

    def __init__(self, enabled: bool = True):
        """Initialize audit logger.

        Args:
            enabled: Whether audit logging is enabled.
        """
        self._enabled = enabled
        self._command = "library"
        logger.debug("AuditLogger initialized (enabled=%s)", enabled)

    @property
    def enabled(self) -> bool:
        return self._enabled

    def set_enabled(self, enabled: bool) -> None:
        self._enabled = enabled

    def set_command(self, command: str) -> None:
        """Tag subsequent entries with the running CLI command."""
        self._command = command

    def _summarize(self, params: dict[str, Any]) -> dict[str, Any]:
        """Shorten long lists so entries stay one readable line."""
        summary: dict[str, Any] = {}
        for key, value in params.items():
            if isinstance(value, list | tuple) and len(value) > self.MAX_LIST_ITEMS:
                summary[key] = f"[{len(value)} items]"
            elif isinstance(value, dict):
                summary[key] = self._summarize(value)
            else:
                summary[key] = value
        return summary

    def log(self, entry: AuditEntry) -> None:
        """Write audit entry to stderr.

        Args:
            entry: The audit entry to log.
        """
        if not self._enabled:
            return

        try:
            line = json.dumps({"audit": entry.model_dump()}, default=str)
            print(line, file=sys.stderr, flush=True)
        except Exception as e:
            logger.error("Failed to write audit log: %s", e)

    def log_stage(
        self,
        stage: str,
        parameters: dict[str, Any],
        result_status: str | None = None,
        error_message: str | None = None,
        duration_ms: float | None = None,
    ) -> None:
        """Log one pipeline stage.

        Args:
            stage: Name of the stage.
            parameters: Stage parameters (long lists are summarized).
            result_status: "success" or "error".
            error_message: Error message if failed.
            duration_ms: Execution time in milliseconds.
        """
        entry = AuditEntry(
            command=self._command,
            stage=stage,
            parameters=self._summarize(parameters),
            result_status=result_status,
            error_message=error_message,
            duration_ms=duration_ms,
        )
        self.log(entry)


_FALSE_VALUES = {"0", "false", "no", "off"}


def _audit_enabled_from_env() -> bool:
    return os.getenv("FRACWALK_AUDIT", "1").strip().lower() not in _FALSE_VALUES


# Global singleton
audit_logger = AuditLogger(enabled=_audit_enabled_from_env())
