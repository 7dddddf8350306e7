"""Fractional operators on closed-form test functions."""

from fracwalk.operators.fractional import (
    frac_laplacian,
    frac_laplacian_estimate,
    marchaud_constant,
    riesz_derivative,
    riesz_estimate,
    riesz_factor,
    weyl_estimate,
    weyl_left,
    weyl_right,
)
from fracwalk.operators.functions import Family, TestFunction
from fracwalk.operators.representations import (
    Multiplier,
    bochner_estimate,
    bochner_subordinate_heat,
    cp_generator_apply,
    cp_generator_estimate,
    multiplier_apply,
    multiplier_estimate,
    pointwise_multiplier,
    power_multiplier,
    skewed_stable_generator,
)
from fracwalk.operators.results import (
    LAPLACIAN_FORMS,
    OPERATOR_NAMES,
    OperatorName,
    OperatorResult,
    evaluate_operator,
    multiplier_gap,
    operator_multiplier,
    operator_tail,
    operator_transform,
)

__all__ = [
    # Test functions
    "Family",
    "TestFunction",
    # Singular integrals
    "frac_laplacian",
    "frac_laplacian_estimate",
    "marchaud_constant",
    "riesz_derivative",
    "riesz_estimate",
    "riesz_factor",
    "weyl_estimate",
    "weyl_left",
    "weyl_right",
    # Representations
    "Multiplier",
    "bochner_estimate",
    "bochner_subordinate_heat",
    "cp_generator_apply",
    "cp_generator_estimate",
    "multiplier_apply",
    "multiplier_estimate",
    "pointwise_multiplier",
    "power_multiplier",
    "skewed_stable_generator",
    # Results
    "LAPLACIAN_FORMS",
    "OPERATOR_NAMES",
    "OperatorName",
    "OperatorResult",
    "evaluate_operator",
    "multiplier_gap",
    "operator_multiplier",
    "operator_tail",
    "operator_transform",
]
