"""Shared helpers for fracwalk.

This module exposes the exception hierarchy used across all subpackages.
"""

from fracwalk.utils.errors import (
    AcceptanceError,
    ConfigError,
    DivergenceError,
    DomainError,
    EmptyBatchError,
    FracWalkError,
    GridExtentWarning,
    HypothesisError,
    NumericalError,
    PoissonOverflowError,
    PoleError,
    QuadratureError,
    ShapeMismatchError,
)

__all__ = [
    "FracWalkError",
    "ConfigError",
    "HypothesisError",
    "NumericalError",
    "QuadratureError",
    "DivergenceError",
    "PoleError",
    "DomainError",
    "PoissonOverflowError",
    "EmptyBatchError",
    "ShapeMismatchError",
    "AcceptanceError",
    "GridExtentWarning",
]
