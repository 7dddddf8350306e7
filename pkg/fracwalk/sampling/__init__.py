"""Seeded variates, compound Poisson walks and stable limit samplers."""

from fracwalk.sampling.laws import (
    DEFAULT_POISSON_CAP,
    JumpLaw,
    ParetoExpLaw,
    SampleBatch,
    StudentGaussLaw,
    WalkConfig,
    symmetrized_density,
    walk_mean_jumps,
)
from fracwalk.sampling.stable import (
    sample_isotropic_stable,
    sample_limit_thm1,
    sample_stable_subordinator,
    sample_symmetric_stable,
    thm1_time_map,
)
from fracwalk.sampling.streams import RngStream
from fracwalk.sampling.variates import (
    sample_pareto_jump,
    sample_poisson,
    sample_rademacher,
    sample_reciprocal_gamma,
    sample_student_jump,
)
from fracwalk.sampling.walks import (
    block_size_for,
    config_echo,
    draw_blocks,
    sample_walk_batch,
    sample_walk_endpoint,
)

__all__ = [
    # Streams and laws
    "RngStream",
    "DEFAULT_POISSON_CAP",
    "JumpLaw",
    "ParetoExpLaw",
    "StudentGaussLaw",
    "WalkConfig",
    "SampleBatch",
    "symmetrized_density",
    "walk_mean_jumps",
    # Variates
    "sample_poisson",
    "sample_pareto_jump",
    "sample_rademacher",
    "sample_reciprocal_gamma",
    "sample_student_jump",
    # Stable laws
    "sample_stable_subordinator",
    "sample_limit_thm1",
    "sample_symmetric_stable",
    "sample_isotropic_stable",
    "thm1_time_map",
    # Walks
    "block_size_for",
    "config_echo",
    "draw_blocks",
    "sample_walk_batch",
    "sample_walk_endpoint",
]
