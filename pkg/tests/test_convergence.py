"""Tests for empirical CFs, KS statistics, tail estimates and sweeps."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import stats

from fracwalk.convergence.statistics import (
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
    GeneratorRow,
    SweepRow,
    evaluate_sweep,
    generator_limit_converges,
    run_generator_limit,
    run_sweep,
    run_sweep_thm1,
    run_sweep_thm2,
    run_sweep_thm3,
)
from fracwalk.numerics.grids import Grid1D, GridD
from fracwalk.operators.functions import TestFunction
from fracwalk.operators.representations import cp_generator_apply
from fracwalk.sampling.laws import ParetoExpLaw, SampleBatch
from fracwalk.sampling.stable import sample_limit_thm1, sample_symmetric_stable
from fracwalk.sampling.variates import sample_pareto_jump
from fracwalk.symbols.grid import SymbolSpec
from fracwalk.utils.errors import ConfigError, DomainError, ShapeMismatchError


def _row(gamma: float, cf_error: float | None, n: int = 10_000) -> SweepRow:
    return SweepRow(
        gamma=gamma,
        n=n,
        cf_error=cf_error,
        ks=None if cf_error is None else 0.01,
        ks_critical=0.02,
        error=None if cf_error is not None else "NumericalError: failed",
    )


class TestEmpiricalCf:
    """Tests for empirical_cf and cf_sup_distance."""

    def test_zero_frequency_is_one(self) -> None:
        """The ECF is exactly 1 at the origin."""
        batch = SampleBatch(np.array([0.3, -1.2, 2.5]))
        values = empirical_cf(batch, Grid1D.uniform(-1.0, 1.0, 3))
        assert values[1] == 1.0

    def test_symmetric_batch_is_real(self) -> None:
        """Samples closed under x -> -x give a real ECF."""
        batch = SampleBatch(np.array([0.5, -0.5, 2.0, -2.0]))
        values = empirical_cf(batch, Grid1D.uniform(0.5, 2.0, 4))
        np.testing.assert_allclose(values.imag, 0.0, atol=1e-15)
        expected = 0.5 * (np.cos(0.5 * 0.5) + np.cos(2.0 * 0.5))
        assert values[0].real == pytest.approx(expected)

    def test_chunking_does_not_change_values(self, rng: np.random.Generator) -> None:
        """Chunked sums match a single pass."""
        batch = SampleBatch(rng.standard_normal(1000))
        grid = Grid1D.uniform(-2.0, 2.0, 9)
        np.testing.assert_allclose(
            empirical_cf(batch, grid, chunk=7), empirical_cf(batch, grid), atol=1e-13
        )

    def test_dimension_mismatch(self) -> None:
        """A 1-d grid cannot probe a 2-d batch."""
        batch = SampleBatch(np.zeros((4, 2)))
        with pytest.raises(ShapeMismatchError):
            empirical_cf(batch, Grid1D.uniform(0.0, 1.0, 3))

    def test_sup_distance(self) -> None:
        """Largest modulus of the difference; shapes must agree."""
        a = np.array([1.0 + 0j, 0.5 + 0.5j])
        b = np.array([1.0 + 0j, 0.5 - 0.5j])
        assert cf_sup_distance(a, b) == pytest.approx(1.0)
        with pytest.raises(ShapeMismatchError):
            cf_sup_distance(a, b[:1])

    def test_report_rows(self, rng: np.random.Generator) -> None:
        """Reports tabulate both CFs against the grid."""
        batch = SampleBatch(rng.standard_normal(5000))
        grid = Grid1D.uniform(-2.0, 2.0, 5)
        gauss = np.exp(-0.5 * grid.points**2).astype(np.complex128)
        report = ecf_report(batch, grid, gauss, seed=0)
        assert report.to_rows().shape == (5, 5)
        assert report.header() == ["xi", "re_ecf", "im_ecf", "re_cf", "im_cf"]
        assert report.sup_error < 5.0 / math.sqrt(5000)
        assert report.to_dict()["n"] == 5000

    def test_radial_gap_needs_plane(self) -> None:
        """Rotations need d >= 2."""
        with pytest.raises(DomainError):
            radial_symmetry_gap(SampleBatch(np.zeros(3)), Grid1D.uniform(0, 1, 3))

    def test_radial_gap_of_gaussian_cloud(self, rng: np.random.Generator) -> None:
        """An isotropic Gaussian cloud is rotation invariant up to noise."""
        batch = SampleBatch(rng.standard_normal((20_000, 2)))
        gap = radial_symmetry_gap(batch, Grid1D.uniform(0.0, 2.0, 5))
        assert gap < 5.0 / math.sqrt(batch.n)


class TestKolmogorovSmirnov:
    """Tests for KS statistics and critical values."""

    def test_critical_values(self) -> None:
        """K_0.99 = 1.6276 scaled by sqrt(n) or the two-sample factor."""
        assert ks_critical_value(100) == pytest.approx(0.16276, abs=1e-4)
        assert ks_critical_value(200, 200) == pytest.approx(
            1.6276 * math.sqrt(2.0 / 200.0), abs=1e-4
        )

    def test_rejects_bad_level(self) -> None:
        """Levels are probabilities."""
        with pytest.raises(DomainError):
            ks_critical_value(10, level=1.0)

    def test_normal_sample_passes(self, rng: np.random.Generator) -> None:
        """A normal sample stays below the 99% critical value."""
        sample = rng.standard_normal(2000)
        assert ks_statistic(sample, stats.norm.cdf) < ks_critical_value(2000)

    @pytest.mark.parametrize(("p", "q"), [(1.0, 0.0), (0.5, 0.5)])
    def test_detects_a_perturbed_time(
        self, p: float, q: float, rng: np.random.Generator
    ) -> None:
        """Scaling t* by 1.2 pushes the statistic above the 95% band."""
        n = 10_000
        reference = sample_limit_thm1(0.5, p, q, 1.0, 1.0, rng, n)
        same = sample_limit_thm1(0.5, p, q, 1.0, 1.0, rng, n)
        perturbed = sample_limit_thm1(0.5, p, q, 1.0, 1.2, rng, n)
        assert two_sample_ks(reference, same) < ks_critical_value(n, n)
        assert two_sample_ks(reference, perturbed) > ks_critical_value(
            n, n, level=0.95
        )

    @pytest.mark.slow
    def test_two_sample_calibration(self) -> None:
        """Equal laws are rejected at about 5% of seeds at the 95% level."""
        n = 1000
        critical = ks_critical_value(n, n, level=0.95)
        rejections = 0
        for seed in range(200):
            rng = np.random.default_rng(seed)
            a = sample_symmetric_stable(1.2, 1.0, rng, n)
            b = sample_symmetric_stable(1.2, 1.0, rng, n)
            rejections += two_sample_ks(a, b) > critical
        assert 2 <= rejections <= 20


class TestTailEstimates:
    """Tests for the Hill estimator and the survival fit."""

    def test_hill_recovers_pareto_index(self, rng: np.random.Generator) -> None:
        """Pareto(1.5) samples give an index near 1.5."""
        sample = sample_pareto_jump(1.5, 1.0, rng, 100_000)
        assert hill_estimator(sample, 2000) == pytest.approx(1.5, abs=0.15)

    @pytest.mark.parametrize("scale", [0.01, 3.0, 1e4])
    def test_hill_is_scale_invariant(
        self, scale: float, rng: np.random.Generator
    ) -> None:
        """Rescaling the sample leaves the index estimate unchanged."""
        sample = sample_pareto_jump(1.5, 1.0, rng, 20_000)
        assert hill_estimator(scale * sample, 500) == pytest.approx(
            hill_estimator(sample, 500), rel=1e-9
        )

    def test_survival_slope(self, rng: np.random.Generator) -> None:
        """log P{|X| > u} falls with slope -alpha."""
        sample = sample_pareto_jump(1.5, 1.0, rng, 100_000)
        slope = fit_tail_slope(sample, np.array([2.0, 4.0, 8.0, 16.0]))
        assert slope == pytest.approx(1.5, abs=0.1)

    def test_hill_rejects_bad_order(self) -> None:
        """k must leave at least one sample below the top block."""
        with pytest.raises(DomainError):
            hill_estimator(np.array([1.0, 2.0, 3.0]), 3)
        with pytest.raises(DomainError):
            hill_estimator(np.array([-1.0, 2.0, 3.0]), 1)


class TestEvaluateSweep:
    """Tests for the sweep verdict."""

    def test_shrinking_errors_pass(self) -> None:
        """Decreasing errors ending below 0.02 pass."""
        rows = [_row(0.1, 0.1), _row(0.01, 0.05), _row(0.001, 0.01)]
        acceptance = evaluate_sweep(rows)
        assert acceptance.monotone
        assert acceptance.slack == pytest.approx(0.03)
        assert acceptance.passed

    def test_slack_absorbs_noise(self) -> None:
        """A rise within 3 / sqrt(n) still counts as monotone."""
        rows = [_row(0.1, 0.010), _row(0.01, 0.035)]
        assert evaluate_sweep(rows).monotone

    def test_growing_errors_fail(self) -> None:
        """A rise beyond the slack breaks monotonicity."""
        rows = [_row(0.1, 0.01), _row(0.01, 0.05)]
        acceptance = evaluate_sweep(rows)
        assert not acceptance.monotone
        assert not acceptance.passed

    def test_final_threshold(self) -> None:
        """The last error must reach the threshold."""
        rows = [_row(0.1, 0.2), _row(0.01, 0.1)]
        assert not evaluate_sweep(rows).passed
        assert evaluate_sweep(rows, final_threshold=0.15).passed

    def test_failed_rows(self) -> None:
        """Annotated rows are listed and fail the sweep."""
        rows = [_row(0.1, 0.01), _row(0.01, None), _row(0.001, 0.005)]
        acceptance = evaluate_sweep(rows)
        assert acceptance.failed_rows == [0.01]
        assert acceptance.monotone
        assert not acceptance.passed


class TestRunSweep:
    """Small end-to-end sweeps."""

    @pytest.fixture
    def spec(self) -> SymbolSpec:
        return SymbolSpec(theorem="thm2", alpha=0.5, lam=1.0)

    def test_rows_follow_gammas(self, spec: SymbolSpec) -> None:
        """One row per gamma with finite errors and a shared critical value."""
        grid = Grid1D.uniform(-2.0, 2.0, 9)
        result = run_sweep(spec, 1.0, [0.1, 0.01], 2000, 1, xi_grid=grid)
        assert [row.gamma for row in result.rows] == [0.1, 0.01]
        assert all(row.ok for row in result.rows)
        assert result.to_rows().shape == (2, 5)
        critical = ks_critical_value(2000, 2000)
        assert result.rows[0].ks_critical == pytest.approx(critical)
        assert result.params["seed"] == 1

    def test_deterministic_across_threads(self, spec: SymbolSpec) -> None:
        """Row streams make the sweep independent of the thread count."""
        grid = Grid1D.uniform(-2.0, 2.0, 5)
        serial = run_sweep(spec, 1.0, [0.1, 0.01], 1000, 4, xi_grid=grid)
        pooled = run_sweep(spec, 1.0, [0.1, 0.01], 1000, 4, xi_grid=grid, threads=2)
        assert [r.cf_error for r in serial.rows] == [r.cf_error for r in pooled.rows]
        assert [r.ks for r in serial.rows] == [r.ks for r in pooled.rows]

    def test_failing_row_is_annotated(self, spec: SymbolSpec) -> None:
        """A Poisson overflow marks its row and the sweep goes on."""
        grid = Grid1D.uniform(-1.0, 1.0, 3)
        result = run_sweep(spec, 1.0, [0.1, 1e-20], 500, 0, xi_grid=grid)
        failed = result.rows[1]
        assert not failed.ok
        assert failed.error is not None
        assert failed.error.startswith("PoissonOverflowError")
        assert math.isnan(result.to_rows()[1, 2])
        assert result.acceptance.failed_rows == [1e-20]
        assert result.reports[1] is None

    def test_rejects_increasing_gammas(self, spec: SymbolSpec) -> None:
        """Sweeps run towards smaller truncation levels."""
        with pytest.raises(ConfigError):
            run_sweep(spec, 1.0, [0.01, 0.1], 100, 0)

    def test_thm1_wrapper(self) -> None:
        """Skewed sweeps carry p and q into the limit spec."""
        grid = Grid1D.uniform(-2.0, 2.0, 5)
        result = run_sweep_thm1(
            0.5, 0.5, 0.5, 1.0, 1.0, [0.1, 0.01], 1000, 3, xi_grid=grid
        )
        assert (result.spec.theorem, result.spec.p, result.spec.q) == (
            "thm1",
            0.5,
            0.5,
        )
        assert result.spec.gamma is None
        assert all(row.ok for row in result.rows)

    def test_thm2_wrapper(self) -> None:
        """Symmetric sweeps accept alpha above 1."""
        grid = Grid1D.uniform(-2.0, 2.0, 5)
        result = run_sweep_thm2(1.2, 1.0, 1.0, [0.1, 0.01], 1000, 3, xi_grid=grid)
        assert (result.spec.theorem, result.spec.alpha) == ("thm2", 1.2)
        assert [row.gamma for row in result.rows] == [0.1, 0.01]
        assert all(row.ok for row in result.rows)

    def test_thm3_wrapper(self) -> None:
        """Student sweeps run in the requested dimension."""
        grid = GridD.axis(Grid1D.uniform(-2.0, 2.0, 5), 2)
        result = run_sweep_thm3(0.5, 1.0, 1.0, 2, [0.1, 0.01], 1000, 3, xi_grid=grid)
        assert (result.spec.theorem, result.spec.d) == ("thm3", 2)
        assert all(row.ok for row in result.rows)
        assert result.params["n"] == 1000


class TestGeneratorLimit:
    """Tests for the difference-quotient experiment."""

    def test_rows_and_target(self, gaussian: TestFunction) -> None:
        """Every row compares against the compensated generator."""
        law = ParetoExpLaw(alpha=3.0, gamma=1.0)
        rows = run_generator_limit(gaussian, 0.0, law, 1.0, [0.5, 0.25], 5000, 3)
        target = cp_generator_apply(gaussian, 0.0, law, 1.0, compensated=True)
        assert [row.h for row in rows] == [0.5, 0.25]
        for row in rows:
            assert row.target == pytest.approx(target)
            assert row.error == pytest.approx(abs(row.quotient - target))
            assert row.stderr > 0

    @pytest.mark.parametrize("h_list", [[], [0.1, 0.1], [0.1, -0.05], [0.05, 0.1]])
    def test_rejects_bad_steps(
        self, gaussian: TestFunction, h_list: list[float]
    ) -> None:
        """Steps must be positive and strictly decreasing."""
        law = ParetoExpLaw(alpha=3.0, gamma=1.0)
        with pytest.raises(ConfigError) as exc_info:
            run_generator_limit(gaussian, 0.0, law, 1.0, h_list, 10, 0)
        assert exc_info.value.field == "h"

    def test_convergence_verdict(self) -> None:
        """Shrinking errors within the noise that end small converge."""

        def row(h: float, error: float) -> GeneratorRow:
            return GeneratorRow(
                h=h, n=100, quotient=error, target=0.0, error=error, stderr=0.001
            )

        assert generator_limit_converges([row(0.1, 0.2), row(0.05, 0.04)])
        assert not generator_limit_converges([row(0.1, 0.02), row(0.05, 0.2)])
        assert not generator_limit_converges([row(0.1, 0.2), row(0.05, 0.1)])
        assert not generator_limit_converges([])
