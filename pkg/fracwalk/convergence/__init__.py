"""Empirical checks that rescaled walks reach their stable limits."""

from fracwalk.convergence.statistics import (
    DEFAULT_KS_LEVEL,
    EcfReport,
    cf_sup_distance,
    ecf_report,
    empirical_cf,
    fit_tail_slope,
    hill_estimator,
    ks_critical_value,
    ks_statistic,
    radial_symmetry_gap,
    two_sample_ks,
)
from fracwalk.convergence.sweeps import (
    MC_SLACK,
    GeneratorRow,
    SweepAcceptance,
    SweepResult,
    SweepRow,
    default_grid,
    evaluate_sweep,
    generator_limit_converges,
    limit_sampler_for,
    run_generator_limit,
    run_sweep,
    run_sweep_thm1,
    run_sweep_thm2,
    run_sweep_thm3,
    walk_config_for,
)

__all__ = [
    # Statistics
    "DEFAULT_KS_LEVEL",
    "EcfReport",
    "cf_sup_distance",
    "ecf_report",
    "empirical_cf",
    "fit_tail_slope",
    "hill_estimator",
    "ks_critical_value",
    "ks_statistic",
    "radial_symmetry_gap",
    "two_sample_ks",
    # Sweeps
    "MC_SLACK",
    "GeneratorRow",
    "SweepAcceptance",
    "SweepResult",
    "SweepRow",
    "default_grid",
    "evaluate_sweep",
    "generator_limit_converges",
    "limit_sampler_for",
    "run_generator_limit",
    "run_sweep",
    "run_sweep_thm1",
    "run_sweep_thm2",
    "run_sweep_thm3",
    "walk_config_for",
]
