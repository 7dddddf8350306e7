"""Fourier symbols of the rescaled walks, their limits and constants."""

from fracwalk.symbols.constants import (
    constant_C1,
    constant_C1_closed_form,
    constant_Cd,
    constant_Cd_closed_form,
)
from fracwalk.symbols.grid import (
    SymbolEvaluator,
    SymbolGrid,
    SymbolSpec,
    Theorem,
    evaluate_symbol_grid,
    spec_echo,
    stable_symbol_cf,
    time_map,
    walk_cf,
    walk_symbol,
)
from fracwalk.symbols.pareto import pareto_cosine_integral, pareto_sine_integral
from fracwalk.symbols.student import (
    student_cdf,
    student_density,
    student_kernel_constant,
    tail_exponent_bound,
)
from fracwalk.symbols.theorem1 import (
    pareto_symbol,
    subordinator_laplace,
    symbol_thm1_limit,
    symbol_thm1_pre,
)
from fracwalk.symbols.theorem2 import symbol_thm2_limit, symbol_thm2_pre
from fracwalk.symbols.theorem3 import (
    student_characteristic_function,
    symbol_thm3_closed_form,
    symbol_thm3_limit,
    symbol_thm3_pre,
)

__all__ = [
    # Constants
    "constant_C1",
    "constant_C1_closed_form",
    "constant_Cd",
    "constant_Cd_closed_form",
    # Student law
    "student_cdf",
    "student_density",
    "student_kernel_constant",
    "student_characteristic_function",
    "tail_exponent_bound",
    # Symbols
    "pareto_cosine_integral",
    "pareto_sine_integral",
    "pareto_symbol",
    "subordinator_laplace",
    "symbol_thm1_limit",
    "symbol_thm1_pre",
    "symbol_thm2_limit",
    "symbol_thm2_pre",
    "symbol_thm3_closed_form",
    "symbol_thm3_limit",
    "symbol_thm3_pre",
    # Grids
    "SymbolEvaluator",
    "SymbolGrid",
    "SymbolSpec",
    "Theorem",
    "evaluate_symbol_grid",
    "spec_echo",
    "stable_symbol_cf",
    "time_map",
    "walk_cf",
    "walk_symbol",
]
