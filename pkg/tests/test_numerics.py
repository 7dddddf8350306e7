"""Tests for the numerics package: special functions, grids, quadrature."""

from __future__ import annotations

import math
from typing import Any, Literal

import numpy as np
import pytest
from pydantic import ValidationError

from fracwalk.numerics.fourier import AlgebraicTail, SampledFunction, fourier_transform
from fracwalk.numerics.grids import Grid1D, GridD, as_points, default_xi_grid
from fracwalk.numerics.quadrature import (
    Estimate,
    FarField,
    QuadratureSpec,
    fourier_cutoff,
    integrate_interval,
    integrate_singular_symmetric,
    integrate_tail,
    power_tail,
    probe_second_difference,
)
from fracwalk.numerics.special import (
    branch_power,
    gamma_fn,
    reciprocal_gamma_fn,
    sphere_area,
)
from fracwalk.numerics.sphere import angular_moment, check_dimension, sphere_rule
from fracwalk.operators.functions import TestFunction
from fracwalk.utils.errors import (
    DivergenceError,
    DomainError,
    PoleError,
    ShapeMismatchError,
)


class TestSpecialFunctions:
    """Tests for gamma, reciprocal gamma, sphere areas and branch powers."""

    def test_gamma_at_integers(self) -> None:
        """Gamma(n) = (n - 1)!."""
        assert gamma_fn(4.0) == pytest.approx(6.0)
        assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi))

    @pytest.mark.parametrize("x", np.linspace(0.1, 20.0, 25).tolist())
    def test_gamma_recurrence(self, x: float) -> None:
        """Gamma(x + 1) = x Gamma(x) on [0.1, 20]."""
        assert gamma_fn(x + 1.0) == pytest.approx(x * gamma_fn(x), rel=1e-12)

    @pytest.mark.parametrize("x", [0.0, -1.0, -3.0])
    def test_gamma_poles(self, x: float) -> None:
        """Nonpositive integers are poles."""
        with pytest.raises(PoleError) as exc_info:
            gamma_fn(x)
        assert "pole" in str(exc_info.value)

    def test_reciprocal_gamma_vanishes_at_poles(self) -> None:
        """1/Gamma is zero where Gamma has a pole."""
        assert reciprocal_gamma_fn(-1.0) == 0.0
        assert reciprocal_gamma_fn(3.0) == pytest.approx(0.5)

    def test_sphere_areas(self) -> None:
        """|S^0| = 2, |S^1| = 2 pi, |S^2| = 4 pi."""
        assert sphere_area(1) == pytest.approx(2.0)
        assert sphere_area(2) == pytest.approx(2.0 * math.pi)
        assert sphere_area(3) == pytest.approx(4.0 * math.pi)

    def test_branch_power_at_origin(self) -> None:
        """Both branches vanish at xi = 0."""
        assert branch_power(0.0, 0.7, 1) == 0j
        assert branch_power(0.0, 0.7, -1) == 0j

    def test_branch_power_first_order(self) -> None:
        """(i xi)^1 = i xi and (-i xi)^1 = -i xi."""
        assert branch_power(2.0, 1.0, 1) == pytest.approx(2j)
        assert branch_power(2.0, 1.0, -1) == pytest.approx(-2j)
        assert branch_power(-2.0, 1.0, 1) == pytest.approx(-2j)

    @pytest.mark.parametrize("alpha", [0.3, 0.9, 1.6])
    def test_branch_power_is_hermitian(self, alpha: float) -> None:
        """(i (-xi))^alpha is the conjugate of (i xi)^alpha."""
        for xi in (0.4, 1.0, 3.5):
            assert branch_power(-xi, alpha, 1) == pytest.approx(
                branch_power(xi, alpha, 1).conjugate()
            )


class TestGrids:
    """Tests for Grid1D and GridD."""

    def test_uniform_grid(self) -> None:
        """Uniform grids carry trapezoid weights and a spacing."""
        grid = Grid1D.uniform(-1.0, 1.0, 5)
        assert len(grid) == 5
        assert grid.spacing == pytest.approx(0.5)
        assert grid.weights.sum() == pytest.approx(2.0)
        assert grid.extent == (-1.0, 1.0)

    def test_single_point_grid(self) -> None:
        """A one-point grid has no spacing."""
        grid = Grid1D.uniform(0.0, 0.0, 1)
        assert len(grid) == 1
        assert grid.spacing is None

    def test_rejects_unsorted_points(self) -> None:
        """Points must be strictly increasing."""
        with pytest.raises(ShapeMismatchError) as exc_info:
            Grid1D(np.array([0.0, 1.0, 1.0]), np.ones(3))
        assert "strictly increasing" in str(exc_info.value)

    def test_rejects_misaligned_weights(self) -> None:
        """Weights must match the points."""
        with pytest.raises(ShapeMismatchError):
            Grid1D(np.array([0.0, 1.0]), np.ones(3))

    def test_gauss_legendre_integrates_polynomials(self) -> None:
        """A composite Gauss rule is exact for cubics."""
        grid = Grid1D.gauss_legendre(0.0, 2.0, 4, 8)
        assert grid.weights.sum() == pytest.approx(2.0)
        assert float(grid.weights @ grid.points**3) == pytest.approx(4.0)

    def test_axis_grid(self) -> None:
        """Axis grids place the radial points on one coordinate."""
        radial = Grid1D.uniform(-2.0, 2.0, 5)
        grid = GridD.axis(radial, 3, axis=1)
        assert grid.points.shape == (5, 3)
        np.testing.assert_allclose(grid.points[:, 1], radial.points)
        assert not np.any(grid.points[:, [0, 2]])

    def test_rotation_preserves_norms(self) -> None:
        """Rotations in the (x1, x2) plane keep every radius."""
        grid = GridD.axis(Grid1D.uniform(-2.0, 2.0, 5), 2)
        rotated = grid.rotated(math.pi / 3.0)
        np.testing.assert_allclose(rotated.norms, grid.norms)
        assert not np.allclose(rotated.points, grid.points)

    def test_rotation_needs_two_dimensions(self) -> None:
        """A 1-d GridD cannot be rotated."""
        grid = GridD(np.array([[1.0], [2.0]]))
        with pytest.raises(ShapeMismatchError):
            grid.rotated(0.5)

    def test_as_points_shapes(self) -> None:
        """as_points always returns an (m, d) array."""
        assert as_points(default_xi_grid()).shape == (101, 1)
        grid = GridD.axis(default_xi_grid(11), 2)
        assert as_points(grid).shape == (11, 2)


class TestQuadrature:
    """Tests for the QUADPACK wrappers."""

    def test_interval(self) -> None:
        """Integral of x^2 over [0, 1]."""
        estimate = integrate_interval(lambda x: x * x, 0.0, 1.0)
        assert estimate.value == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert estimate.error >= 0

    def test_empty_interval(self) -> None:
        """Reversed limits integrate to zero."""
        assert integrate_interval(math.exp, 1.0, 0.0) == Estimate(0.0, 0.0)

    def test_power_tail(self) -> None:
        """Integral of y^-2 over [1, inf) is 1, numerically and exactly."""
        assert integrate_tail(lambda y: y**-2, 1.0).value == pytest.approx(1.0)
        assert power_tail(2.0, 1.0) == pytest.approx(1.0)

    def test_power_tail_diverges(self) -> None:
        """y^-1 is not integrable at infinity."""
        with pytest.raises(DivergenceError):
            power_tail(1.0, 1.0)

    def test_exponential_tail(self) -> None:
        """Integral of exp(-y) over [0, inf) is 1."""
        estimate = integrate_tail(lambda y: math.exp(-y), 0.0)
        assert estimate.value == pytest.approx(1.0, abs=1e-10)

    def test_estimate_arithmetic(self) -> None:
        """Errors add and scale with the absolute factor."""
        total = (Estimate(1.0, 0.1) + Estimate(2.0, 0.2)).scaled(-2.0)
        assert total.value == pytest.approx(-6.0)
        assert total.error == pytest.approx(0.6)

    def test_spec_rejects_nonintegrable_exponent(self) -> None:
        """A first difference cannot tame s >= 1."""
        with pytest.raises(ValidationError):
            QuadratureSpec(singularity_exponent=1.5)
        spec = QuadratureSpec(singularity_exponent=1.5, second_difference=True)
        assert spec.singularity_exponent == 1.5

    def test_probe_rejects_first_order_integrand(self) -> None:
        """g(y) = y is not O(y^2)."""
        with pytest.raises(DivergenceError) as exc_info:
            probe_second_difference(lambda y: y)
        assert "O(y^2)" in str(exc_info.value)

    def test_probe_accepts_second_difference(self) -> None:
        """g(y) = 1 - cos y passes the probe."""
        probe_second_difference(lambda y: 1.0 - math.cos(y))

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5])
    def test_singular_symmetric_against_closed_form(self, alpha: float) -> None:
        """Integral of (1 - cos y)|y|^(-alpha-1) is 2 Gamma(1-a) cos(pi a/2)/a."""
        estimate = integrate_singular_symmetric(
            lambda y: 2.0 * math.sin(0.5 * y) ** 2,
            alpha,
            far_field=FarField(constant=1.0, cosine=-1.0, frequency=1.0),
        )
        expected = (
            math.pi
            if alpha == 1.0
            else 2.0 * gamma_fn(1.0 - alpha) * math.cos(math.pi * alpha / 2) / alpha
        )
        assert estimate.value == pytest.approx(expected, rel=1e-7)

    @pytest.mark.parametrize("weight", [None, "cos"])
    def test_tail_is_linear(self, weight: Literal["cos"] | None) -> None:
        """The tail integral of a f + b g is a I(f) + b I(g)."""

        def f(y: float) -> float:
            return math.exp(-y)

        def g(y: float) -> float:
            return y**-2

        options: dict[str, Any] = {"weight": weight, "frequency": 2.0}
        combined = integrate_tail(lambda y: 2.5 * f(y) - 0.7 * g(y), 1.0, **options)
        first = integrate_tail(f, 1.0, **options).value
        second = integrate_tail(g, 1.0, **options).value
        expected = 2.5 * first - 0.7 * second
        assert combined.value == pytest.approx(expected, rel=1e-7, abs=1e-10)

    @pytest.mark.parametrize("alpha", [0.5, 1.5])
    def test_singular_symmetric_is_linear(self, alpha: float) -> None:
        """Principal values are linear in the even integrand."""

        def bounded(y: float) -> float:
            return 1.0 - math.cos(y)

        def bump(y: float) -> float:
            return y * y * math.exp(-y * y)

        first = integrate_singular_symmetric(
            bounded,
            alpha,
            far_field=FarField(constant=1.0, cosine=-1.0, frequency=1.0),
        )
        second = integrate_singular_symmetric(bump, alpha)
        combined = integrate_singular_symmetric(
            lambda y: 3.0 * bounded(y) + 2.0 * bump(y),
            alpha,
            far_field=FarField(constant=3.0, cosine=-3.0, frequency=1.0),
        )
        expected = 3.0 * first.value + 2.0 * second.value
        assert combined.value == pytest.approx(expected, rel=1e-7)

    def test_fourier_cutoff(self) -> None:
        """Oscillatory panels end at 50 / |xi|_max."""
        assert fourier_cutoff(1.0) == 50.0
        assert fourier_cutoff(4.0) == pytest.approx(12.5)
        with pytest.raises(DomainError):
            fourier_cutoff(0.0)

    def test_singular_symmetric_domain(self) -> None:
        """The kernel index must lie in (0, 2)."""
        with pytest.raises(DomainError):
            integrate_singular_symmetric(lambda y: y * y, 2.0)


class TestSphere:
    """Tests for sphere quadrature."""

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_rule_weights_sum_to_area(self, d: int) -> None:
        """Weights add up to |S^{d-1}| and nodes are unit vectors."""
        nodes, weights = sphere_rule(d, 16)
        assert weights.sum() == pytest.approx(sphere_area(d))
        np.testing.assert_allclose(np.linalg.norm(nodes, axis=1), 1.0)

    def test_angular_moments(self) -> None:
        """Moments of omega_1 against their closed forms."""
        assert angular_moment(0.0, 2) == pytest.approx(2.0 * math.pi)
        assert angular_moment(2.0, 3) == pytest.approx(4.0 * math.pi / 3.0)
        assert angular_moment(1.3, 1) == 2.0

    def test_dimension_cap(self) -> None:
        """Dimensions above three are rejected."""
        with pytest.raises(DomainError) as exc_info:
            check_dimension(4)
        assert "1..3" in str(exc_info.value)


class TestFourierTransform:
    """Tests for direct-summation transforms."""

    def test_gaussian_matches_closed_form(self, gaussian: TestFunction) -> None:
        """sqrt(pi) exp(-xi^2/4) for exp(-x^2)."""
        grid = Grid1D.uniform(-3.0, 3.0, 13)
        transform = fourier_transform(gaussian, grid)
        np.testing.assert_allclose(
            transform, gaussian.fourier(grid.points[:, None]), atol=1e-10
        )

    def test_shifted_gaussian_phase(self) -> None:
        """A shift by c multiplies the transform by exp(i xi c)."""
        f = TestFunction(family="gaussian", center=(1.5,), width=0.8)
        grid = Grid1D.uniform(-2.0, 2.0, 9)
        np.testing.assert_allclose(
            fourier_transform(f, grid), f.fourier(grid.points[:, None]), atol=1e-10
        )

    def test_sampled_function(self, gaussian: TestFunction) -> None:
        """Transforming samples on a Gauss grid reproduces the closed form."""
        window = Grid1D.gauss_legendre(-8.0, 8.0, 16, 16)
        sampled = SampledFunction(window, gaussian.evaluate(window.points))
        grid = Grid1D.uniform(-2.0, 2.0, 5)
        np.testing.assert_allclose(
            fourier_transform(sampled, grid),
            gaussian.fourier(grid.points[:, None]),
            atol=1e-10,
        )

    def test_algebraic_tail_at_zero(self) -> None:
        """At xi = 0 a tail c |z|^-p contributes c start^(1-p) / (p-1) per side."""
        tail = AlgebraicTail(center=0.0, start=2.0, right=((4.0, 3.0),))
        assert tail.transform(0.0) == pytest.approx(0.5)

    def test_dimension_mismatch(self, gaussian: TestFunction) -> None:
        """A 2-d grid cannot transform a 1-d function."""
        grid = GridD.axis(Grid1D.uniform(-1.0, 1.0, 3), 2)
        with pytest.raises(ShapeMismatchError):
            fourier_transform(gaussian, grid)
