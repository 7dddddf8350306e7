"""Middleware module for fracwalk: audit trail and parameter validation."""

from fracwalk.middleware.audit_logger import AuditEntry, AuditLogger, audit_logger
from fracwalk.middleware.validator import (
    normalize_theorem,
    parse_float_list,
    validate_alpha,
    validate_dimension,
    validate_gamma_list,
    validate_skew,
    validate_theorem_hypotheses,
)

__all__ = [
    "AuditLogger",
    "AuditEntry",
    "audit_logger",
    "normalize_theorem",
    "parse_float_list",
    "validate_alpha",
    "validate_dimension",
    "validate_gamma_list",
    "validate_skew",
    "validate_theorem_hypotheses",
]
