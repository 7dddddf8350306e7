"""Special functions, quadrature, grids and Fourier transforms.

This subpackage is consumed by every other module; it holds no state.
"""

from fracwalk.numerics.fourier import (
    AlgebraicTail,
    ComplexArray,
    Sampleable,
    SampledFunction,
    fourier_transform,
)
from fracwalk.numerics.grids import (
    FloatArray,
    Grid1D,
    GridD,
    as_points,
    default_xi_grid,
)
from fracwalk.numerics.quadrature import (
    DEFAULT_SPEC,
    Estimate,
    FOURIER_CUTOFF,
    FarField,
    QuadratureSpec,
    fourier_cutoff,
    integrate_interval,
    integrate_log_interval,
    integrate_singular_symmetric,
    integrate_tail,
    power_tail,
    probe_second_difference,
    quad_estimate,
)
from fracwalk.numerics.special import (
    branch_power,
    gamma_fn,
    reciprocal_gamma_fn,
    sphere_area,
)
from fracwalk.numerics.sphere import (
    MAX_DIMENSION,
    angular_moment,
    check_dimension,
    sphere_rule,
)

__all__ = [
    # Special functions
    "gamma_fn",
    "reciprocal_gamma_fn",
    "sphere_area",
    "branch_power",
    # Quadrature
    "DEFAULT_SPEC",
    "Estimate",
    "FOURIER_CUTOFF",
    "FarField",
    "QuadratureSpec",
    "fourier_cutoff",
    "integrate_interval",
    "integrate_log_interval",
    "integrate_singular_symmetric",
    "integrate_tail",
    "power_tail",
    "probe_second_difference",
    "quad_estimate",
    # Sphere
    "MAX_DIMENSION",
    "angular_moment",
    "check_dimension",
    "sphere_rule",
    # Grids and transforms
    "FloatArray",
    "Grid1D",
    "GridD",
    "as_points",
    "default_xi_grid",
    "AlgebraicTail",
    "ComplexArray",
    "Sampleable",
    "SampledFunction",
    "fourier_transform",
]
