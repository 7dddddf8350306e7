"""Shared helpers for fracwalk commands.

This module provides:
- Response builders for the JSON document printed on stdout
- Stage execution wrapper with audit logging and timing
- The outcome type every command returns
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, TypeVar

from fracwalk.middleware.audit_logger import audit_logger

logger = logging.getLogger(__name__)

T = TypeVar("T")


# =============================================================================
# Parameter Hashing
# =============================================================================


def compute_params_hash(params: dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON form of a parameter dict.

    Args:
        params: Parameters to hash.

    Returns:
        Hex digest, stable across runs for equal parameters.
    """
    canonical = json.dumps(params, sort_keys=True, default=str)
    return hashlib.sha256(canonical.encode()).hexdigest()


# =============================================================================
# Response Builders
# =============================================================================


class ResponseKeys:
    """Standard response keys for the stdout document."""

    STATUS = "status"
    COMMAND = "command"
    DATA = "data"
    MESSAGE = "message"
    ERROR = "error"
    ERROR_CODE = "error_code"
    EXIT_CODE = "exit_code"


def build_success_response(
    command: str,
    data: dict[str, Any] | None = None,
    message: str | None = None,
) -> dict[str, Any]:
    """Build standardized success response.

    Args:
        command: Command that ran.
        data: Headline results.
        message: Optional human-readable message.

    Returns:
        Standardized success response dict.
    """
    response: dict[str, Any] = {
        ResponseKeys.STATUS: "success",
        ResponseKeys.COMMAND: command,
    }
    if data is not None:
        response[ResponseKeys.DATA] = data
    if message:
        response[ResponseKeys.MESSAGE] = message
    return response


def build_error_response(
    error: str,
    error_code: str | None = None,
    details: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Build standardized error response.

    Args:
        error: Human-readable error message.
        error_code: Exception class name for programmatic handling.
        details: Optional additional error details.

    Returns:
        Standardized error response dict.
    """
    response: dict[str, Any] = {
        ResponseKeys.STATUS: "error",
        ResponseKeys.ERROR: error,
    }
    if error_code:
        response[ResponseKeys.ERROR_CODE] = error_code
    if details:
        response.update(details)
    return response


# =============================================================================
# Stage Execution Wrapper
# =============================================================================


def execute_stage(
    stage: str,
    params: dict[str, Any],
    operation: Callable[[], T],
    timings: dict[str, float] | None = None,
) -> T:
    """Run one pipeline stage with timing and audit logging.

    Args:
        stage: Name of the stage.
        params: Stage parameters (for audit logging).
        operation: The stage itself.
        timings: Optional map receiving the stage's wall time in ms.

    Returns:
        Result of the operation.
    """
    start_time = time.perf_counter()
    result_status = "success"
    error_message: str | None = None

    try:
        return operation()
    except Exception as e:
        result_status = "error"
        error_message = str(e)
        raise
    finally:
        duration_ms = (time.perf_counter() - start_time) * 1000
        if timings is not None:
            timings[stage] = timings.get(stage, 0.0) + duration_ms
        audit_logger.log_stage(
            stage=stage,
            parameters=params,
            result_status=result_status,
            error_message=error_message,
            duration_ms=duration_ms,
        )


# =============================================================================
# Command Outcome
# =============================================================================


@dataclass
class CommandOutcome:
    """What a command reports back to ``run``.

    Attributes:
        summary: Headline numbers, copied into the manifest and stdout.
        failures: Names of failed statistical or numerical checks.
    """

    summary: dict[str, Any] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


__all__ = [
    "CommandOutcome",
    "ResponseKeys",
    "build_error_response",
    "build_success_response",
    "compute_params_hash",
    "execute_stage",
]
