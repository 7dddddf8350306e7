"""Empirical characteristic functions, KS distances and tail estimators."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy import stats

from fracwalk.numerics.fourier import ComplexArray
from fracwalk.numerics.grids import FloatArray, Grid1D, GridD, as_points
from fracwalk.sampling.laws import SampleBatch
from fracwalk.utils.errors import DomainError, EmptyBatchError, ShapeMismatchError

logger = logging.getLogger(__name__)

# Samples per chunk when forming the phase matrix.
ECF_CHUNK = 8192

DEFAULT_KS_LEVEL = 0.99

CdfFunction = Callable[[FloatArray], FloatArray]


def _values(batch: SampleBatch | FloatArray) -> FloatArray:
    """First coordinate of a batch, or a flat array as given."""
    if isinstance(batch, SampleBatch):
        values = batch.values
    else:
        values = np.asarray(batch, dtype=np.float64).ravel()
    if values.size == 0:
        raise EmptyBatchError("batch is empty")
    return values


# =============================================================================
# Characteristic Functions
# =============================================================================


def empirical_cf(
    batch: SampleBatch, xi_grid: Grid1D | GridD, chunk: int = ECF_CHUNK
) -> ComplexArray:
    """(1/n) sum_k exp(i xi.x_k) at every grid frequency.

    Rows of the grid equal to zero get exactly 1.

    Raises:
        EmptyBatchError: If the batch has no samples.
        ShapeMismatchError: If grid and batch dimensions differ.
    """
    if batch.n == 0:
        raise EmptyBatchError("cannot form the empirical CF of an empty batch")
    xi = as_points(xi_grid)
    if xi.shape[1] != batch.dimension:
        raise ShapeMismatchError(
            "frequency grid and batch dimension disagree",
            {"grid": xi.shape[1], "batch": batch.dimension},
        )
    cos_sum = np.zeros(xi.shape[0])
    sin_sum = np.zeros(xi.shape[0])
    for start in range(0, batch.n, chunk):
        phase = batch.points[start : start + chunk] @ xi.T
        cos_sum += np.cos(phase).sum(axis=0)
        sin_sum += np.sin(phase).sum(axis=0)
    values = (cos_sum + 1j * sin_sum) / batch.n
    values[~np.any(xi, axis=1)] = 1.0
    return values


def cf_sup_distance(empirical: ComplexArray, theoretical: ComplexArray) -> float:
    """max_k |empirical_k - theoretical_k|."""
    a = np.asarray(empirical, dtype=np.complex128)
    b = np.asarray(theoretical, dtype=np.complex128)
    if a.shape != b.shape:
        raise ShapeMismatchError(
            "characteristic functions have different shapes",
            {"empirical": a.shape, "theoretical": b.shape},
        )
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


@dataclass(frozen=True)
class EcfReport:
    """Empirical versus theoretical characteristic function on a grid.

    Attributes:
        grid: Frequencies.
        empirical: Empirical CF values.
        theoretical: Reference CF values.
        n: Sample count.
        seed: Master seed of the batch.
        spec: Echo of the parameters behind the reference.
    """

    grid: Grid1D | GridD
    empirical: ComplexArray
    theoretical: ComplexArray
    n: int
    seed: int
    spec: dict[str, Any] = field(default_factory=dict)

    @property
    def sup_error(self) -> float:
        return cf_sup_distance(self.empirical, self.theoretical)

    def to_rows(self) -> FloatArray:
        """Columns: frequency coordinates, Re/Im of both CFs."""
        return np.column_stack(
            [
                as_points(self.grid),
                self.empirical.real,
                self.empirical.imag,
                self.theoretical.real,
                self.theoretical.imag,
            ]
        )

    def header(self) -> list[str]:
        d = as_points(self.grid).shape[1]
        names = ["xi"] if d == 1 else [f"xi{k + 1}" for k in range(d)]
        return [*names, "re_ecf", "im_ecf", "re_cf", "im_cf"]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "seed": self.seed,
            "sup_error": self.sup_error,
            "spec": self.spec,
            "xi": as_points(self.grid).tolist(),
            "empirical": [[z.real, z.imag] for z in self.empirical],
            "theoretical": [[z.real, z.imag] for z in self.theoretical],
        }


def ecf_report(
    batch: SampleBatch,
    xi_grid: Grid1D | GridD,
    theoretical: ComplexArray,
    seed: int,
    spec: dict[str, Any] | None = None,
) -> EcfReport:
    """Compare a batch's empirical CF with a reference CF."""
    empirical = empirical_cf(batch, xi_grid)
    return EcfReport(xi_grid, empirical, theoretical, batch.n, seed, spec or {})


def radial_symmetry_gap(
    batch: SampleBatch, radii: Grid1D, angle: float = np.pi / 3.0
) -> float:
    """sup |ECF(xi) - ECF(R xi)| along the first axis, R a rotation by angle."""
    if batch.dimension < 2:
        raise DomainError("radial symmetry needs d >= 2")
    axis = GridD.axis(radii, batch.dimension)
    return cf_sup_distance(
        empirical_cf(batch, axis), empirical_cf(batch, axis.rotated(angle))
    )


# =============================================================================
# Kolmogorov-Smirnov
# =============================================================================


def ks_statistic(
    batch: SampleBatch | FloatArray, reference_cdf: CdfFunction
) -> float:
    """sup |F_n - F| of the first coordinate against a reference CDF."""
    values = _values(batch)
    return float(stats.ks_1samp(values, reference_cdf).statistic)


def two_sample_ks(
    batch_a: SampleBatch | FloatArray, batch_b: SampleBatch | FloatArray
) -> float:
    """sup |F_a - F_b| of the first coordinates."""
    return float(stats.ks_2samp(_values(batch_a), _values(batch_b)).statistic)


def ks_critical_value(
    n: int, m: int | None = None, level: float = DEFAULT_KS_LEVEL
) -> float:
    """Asymptotic Kolmogorov critical value at ``level``.

    One-sample: K_level / sqrt(n); two-sample: K_level sqrt((n + m) / (n m)).
    """
    if n < 1 or (m is not None and m < 1):
        raise EmptyBatchError("critical values need nonempty samples")
    if not 0.0 < level < 1.0:
        raise DomainError(f"level must lie in (0, 1), got {level}")
    quantile = float(stats.kstwobign.ppf(level))
    if m is None:
        return quantile / float(np.sqrt(n))
    return quantile * float(np.sqrt((n + m) / (n * m)))


# =============================================================================
# Tails
# =============================================================================


def hill_estimator(values: SampleBatch | FloatArray, k: int) -> float:
    """Hill estimate of the tail index from the top k order statistics.

    k / sum_{i<k} (log X_(n-i) - log X_(n-k)).

    Raises:
        DomainError: If k is not in [1, n) or the sample has nonpositive values.
    """
    sample = _values(values)
    n = sample.size
    if not 1 <= k < n:
        raise DomainError(f"k must lie in [1, {n}), got {k}")
    if np.any(sample <= 0):
        raise DomainError("Hill estimation needs positive samples")
    ordered = np.sort(sample)
    top = np.log(ordered[n - k :])
    spacing = float(np.sum(top - np.log(ordered[n - k - 1])))
    if spacing <= 0:
        raise DomainError("tied top order statistics leave the estimate undefined")
    return k / spacing


def fit_tail_slope(
    values: SampleBatch | FloatArray, thresholds: FloatArray
) -> float:
    """Tail index from a log-log fit of the empirical survival function of |X|."""
    magnitudes = np.abs(_values(values))
    levels = np.asarray(thresholds, dtype=np.float64)
    if levels.size < 2 or np.any(levels <= 0):
        raise DomainError("need at least two positive thresholds")
    survival = np.array([np.mean(magnitudes > u) for u in levels])
    if np.any(survival == 0):
        raise DomainError(
            "a threshold exceeds every sample",
            {"thresholds": levels.tolist(), "survival": survival.tolist()},
        )
    slope = np.polyfit(np.log(levels), np.log(survival), 1)[0]
    return float(-slope)


__all__ = [
    "CdfFunction",
    "DEFAULT_KS_LEVEL",
    "ECF_CHUNK",
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
]
