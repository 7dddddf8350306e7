"""Parameter validation for the limit theorems and run configurations."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from fracwalk.utils.errors import ConfigError, HypothesisError

logger = logging.getLogger(__name__)

# Tolerance on p + q = 1 for weights read from text.
SKEW_TOLERANCE = 1e-12

# Hypotheses of each theorem: (lower, upper) for alpha, open interval.
THEOREM_ALPHA_RANGE: dict[str, tuple[float, float]] = {
    "thm1": (0.0, 1.0),
    "thm2": (0.0, 2.0),
    "thm3": (0.0, 1.0),
}


def normalize_theorem(theorem: str | int) -> str:
    """Map "1", 1, "thm1" or "Thm1" to the canonical tag "thm1".

    Raises:
        ConfigError: If the tag names no known theorem.
    """
    tag = str(theorem).strip().lower()
    if not tag.startswith("thm"):
        tag = f"thm{tag}"
    if tag not in THEOREM_ALPHA_RANGE:
        raise ConfigError(f"Unknown theorem: {theorem}", field="thm")
    return tag


def validate_skew(p: float, q: float) -> tuple[float, float]:
    """Validate the Rademacher skew weights.

    Args:
        p: Probability of a positive sign.
        q: Probability of a negative sign.

    Returns:
        The pair (p, q).

    Raises:
        HypothesisError: If either weight is negative or p + q != 1.
    """
    if p < 0 or q < 0:
        raise HypothesisError(
            f"skew weights must be nonnegative, got p={p}, q={q}",
            hypothesis="p, q >= 0",
            field="p" if p < 0 else "q",
        )
    if abs(p + q - 1.0) > SKEW_TOLERANCE:
        raise HypothesisError(
            f"skew weights must satisfy p + q = 1, got p + q = {p + q:g}",
            hypothesis="p + q = 1",
            field="q",
            details={"p": p, "q": q},
        )
    return p, q


def validate_alpha(theorem: str | int, alpha: float) -> float:
    """Check alpha against the range required by ``theorem``.

    Raises:
        HypothesisError: If alpha lies outside the theorem's open interval.
    """
    tag = normalize_theorem(theorem)
    low, high = THEOREM_ALPHA_RANGE[tag]
    if not (math.isfinite(alpha) and low < alpha < high):
        raise HypothesisError(
            f"{tag} requires alpha in ({low:g},{high:g}), got alpha={alpha}",
            hypothesis=f"alpha in ({low:g},{high:g})",
            field="alpha",
        )
    return alpha


def validate_theorem_hypotheses(
    theorem: str | int,
    alpha: float,
    p: float = 0.5,
    q: float = 0.5,
    d: int = 1,
) -> str:
    """Validate a full parameter set for one theorem.

    Theorem 1 needs alpha in (0,1); Theorem 2 needs alpha in (0,2) and a
    symmetric sign law p = q = 1/2; Theorem 3 needs alpha in (0,1) and
    1 <= d <= 3.

    Returns:
        The canonical theorem tag.

    Raises:
        HypothesisError: Naming the first violated hypothesis.
    """
    tag = normalize_theorem(theorem)
    validate_alpha(tag, alpha)
    validate_skew(p, q)
    if tag == "thm2" and p != q:
        raise HypothesisError(
            f"thm2 requires symmetric jumps p = q = 1/2, got p={p}, q={q}",
            hypothesis="p = q = 1/2",
            field="p",
        )
    if tag == "thm3":
        validate_dimension(d)
    return tag


def validate_dimension(d: int) -> int:
    """Check 1 <= d <= 3."""
    if not 1 <= d <= 3:
        raise HypothesisError(
            f"dimension must lie in 1..3, got d={d}",
            hypothesis="1 <= d <= 3",
            field="d",
        )
    return d


def validate_gamma_list(gammas: Sequence[float]) -> list[float]:
    """Validate a gamma sweep: nonempty, positive and strictly decreasing.

    Raises:
        ConfigError: If the list is empty, has a nonpositive entry or is not
            strictly decreasing.
    """
    values = [float(g) for g in gammas]
    if not values:
        raise ConfigError("gamma list cannot be empty", field="gammas")
    if any(not math.isfinite(g) or g <= 0 for g in values):
        raise ConfigError(f"gammas must be positive, got {values}", field="gammas")
    pairs = zip(values, values[1:], strict=False)
    if any(later >= earlier for earlier, later in pairs):
        raise ConfigError(
            f"gammas must be strictly decreasing, got {values}", field="gammas"
        )
    return values


def parse_float_list(text: str, field: str) -> list[float]:
    """Parse a comma-separated list of floats such as "0.1,0.01,0.001".

    Raises:
        ConfigError: If any entry is not a number.
    """
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigError(
            f"Invalid number list for {field}: {text}", field=field
        ) from e


__all__ = [
    "SKEW_TOLERANCE",
    "THEOREM_ALPHA_RANGE",
    "normalize_theorem",
    "parse_float_list",
    "validate_alpha",
    "validate_dimension",
    "validate_gamma_list",
    "validate_skew",
    "validate_theorem_hypotheses",
]
