"""Closed-form test functions.

Families (z = x - center, w = width, k = modulation frequency):

    gaussian            exp(-|z|^2 / w^2)                    any d
    modulated_gaussian  exp(-z^2 / w^2) cos(k z)             d = 1
    cosine              cos(k z_1)                           any d
    constant            1                                    any d
    linear              z_1                                  any d
    quadratic           |z|^2                                any d

Fourier transforms use f_hat(xi) = integral of exp(i xi.x) f(x) dx and are
available in closed form for the two Gaussian families. The heat semigroup
T_s = exp(s Laplacian) acts in closed form on every family.
"""

from __future__ import annotations

import cmath
import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from fracwalk.numerics.fourier import ComplexArray
from fracwalk.numerics.grids import FloatArray
from fracwalk.utils.errors import DomainError

Family = Literal[
    "gaussian", "modulated_gaussian", "cosine", "constant", "linear", "quadratic"
]

# exp(-x^2) < 1e-18 beyond this many widths.
_DECAY_WIDTHS = 6.5


class TestFunction(BaseModel):
    """A closed-form function on R^d."""

    __test__ = False

    model_config = ConfigDict(frozen=True)

    family: Family = Field(default="gaussian", description="Function family")
    center: tuple[float, ...] = Field(default=(0.0,), description="Center in R^d")
    width: float = Field(default=1.0, gt=0, description="Gaussian width w")
    frequency: float = Field(default=0.0, ge=0, description="Modulation k")

    @model_validator(mode="after")
    def _check_family(self) -> TestFunction:
        if not 1 <= len(self.center) <= 3:
            raise ValueError(
                f"center must have 1 to 3 coordinates, got {self.center}"
            )
        if self.family == "modulated_gaussian" and len(self.center) != 1:
            raise ValueError("modulated_gaussian is one-dimensional")
        return self

    # -------------------------------------------------------------------------
    # Basic properties
    # -------------------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return len(self.center)

    @property
    def is_decaying(self) -> bool:
        return self.family in ("gaussian", "modulated_gaussian")

    @property
    def has_fourier_transform(self) -> bool:
        return self.is_decaying

    @property
    def growth_order(self) -> int:
        """Polynomial growth order at infinity (0 for bounded families)."""
        return {"linear": 1, "quadratic": 2}.get(self.family, 0)

    def shifted(self, offset: float | tuple[float, ...]) -> TestFunction:
        """The function x -> f(x - offset)."""
        shift = np.broadcast_to(
            np.asarray(offset, dtype=np.float64), (self.dimension,)
        )
        center = tuple(float(c + s) for c, s in zip(self.center, shift, strict=True))
        return self.model_copy(update={"center": center})

    def support_radius(self) -> float:
        """Half-width of the window outside which f is below 1e-18."""
        if not self.is_decaying:
            raise DomainError(f"{self.family} does not decay; it has no window")
        return _DECAY_WIDTHS * self.width

    def second_derivative_bound(self) -> float:
        """A bound on the sup norm of the Hessian (spectral norm)."""
        w2 = self.width**2
        k = self.frequency
        match self.family:
            case "gaussian":
                return 2.0 / w2
            case "modulated_gaussian":
                return 2.0 / w2 + 4.0 * k / self.width + k * k
            case "cosine":
                return k * k
            case "quadratic":
                return 2.0
        return 0.0

    # -------------------------------------------------------------------------
    # Evaluation
    # -------------------------------------------------------------------------

    def _offsets(self, points: FloatArray) -> FloatArray:
        array = np.asarray(points, dtype=np.float64)
        if array.ndim == 1:
            array = array[:, None] if self.dimension == 1 else array[None, :]
        if array.shape[-1] != self.dimension:
            raise DomainError(
                f"points have {array.shape[-1]} coordinates, expected {self.dimension}"
            )
        return array - np.asarray(self.center)

    def evaluate(self, points: FloatArray) -> FloatArray:
        """Values at an (m, d) array of points (or m scalars when d = 1)."""
        z = self._offsets(points)
        r2 = np.sum(z * z, axis=1)
        k = self.frequency
        match self.family:
            case "gaussian":
                return np.exp(-r2 / self.width**2)
            case "modulated_gaussian":
                return np.exp(-r2 / self.width**2) * np.cos(k * z[:, 0])
            case "cosine":
                return np.cos(k * z[:, 0])
            case "constant":
                return np.ones(z.shape[0])
            case "linear":
                return z[:, 0].copy()
            case "quadratic":
                return r2
        raise DomainError(f"unknown family: {self.family}")

    def value(self, x: float | FloatArray) -> float:
        """Value at a single point."""
        if self.dimension == 1 and isinstance(x, (int, float, np.floating)):
            return self._scalar(float(x) - self.center[0])
        point = np.atleast_1d(np.asarray(x, dtype=np.float64))
        return float(self.evaluate(point[None, :])[0])

    def _scalar(self, z: float) -> float:
        # Quadrature inner loops call this once per node.
        k = self.frequency
        match self.family:
            case "gaussian":
                return math.exp(-z * z / self.width**2)
            case "modulated_gaussian":
                return math.exp(-z * z / self.width**2) * math.cos(k * z)
            case "cosine":
                return math.cos(k * z)
            case "constant":
                return 1.0
            case "linear":
                return z
        return z * z

    def derivative(self, x: float) -> float:
        """First derivative of a one-dimensional function."""
        if self.dimension != 1:
            raise DomainError("derivative is defined for d = 1 only")
        z = x - self.center[0]
        w2 = self.width**2
        k = self.frequency
        match self.family:
            case "gaussian":
                return -2.0 * z / w2 * math.exp(-z * z / w2)
            case "modulated_gaussian":
                envelope = math.exp(-z * z / w2)
                return envelope * (
                    -2.0 * z / w2 * math.cos(k * z) - k * math.sin(k * z)
                )
            case "cosine":
                return -k * math.sin(k * z)
            case "linear":
                return 1.0
            case "quadratic":
                return 2.0 * z
        return 0.0

    # -------------------------------------------------------------------------
    # Fourier transform
    # -------------------------------------------------------------------------

    def fourier(self, xi: FloatArray) -> ComplexArray:
        """Closed-form transform at an (m, d) array of frequencies."""
        if not self.has_fourier_transform:
            raise DomainError(f"{self.family} has no closed-form Fourier transform")
        frequencies = np.atleast_2d(np.asarray(xi, dtype=np.float64))
        if frequencies.shape[1] != self.dimension:
            frequencies = frequencies.reshape(-1, self.dimension)
        phase = np.exp(1j * (frequencies @ np.asarray(self.center)))
        w = self.width
        mass = (math.sqrt(math.pi) * w) ** self.dimension
        if self.family == "gaussian":
            rho2 = np.sum(frequencies * frequencies, axis=1)
            return mass * np.exp(-0.25 * w * w * rho2) * phase
        k = self.frequency
        s = frequencies[:, 0]
        both = np.exp(-0.25 * w * w * (s - k) ** 2)
        both += np.exp(-0.25 * w * w * (s + k) ** 2)
        return 0.5 * mass * both * phase

    def frequency_radius(self) -> float:
        """Frequency beyond which |f_hat| is below 1e-15 of its peak."""
        if not self.has_fourier_transform:
            raise DomainError(f"{self.family} has no closed-form Fourier transform")
        return self.frequency + 12.0 / self.width

    def central_moments(self) -> tuple[float, float, float]:
        """Moments M_0, M_2, M_4 of a 1-d decaying function about its center.

        Odd moments vanish since both Gaussian families are even about the
        center.
        """
        if not self.is_decaying or self.dimension != 1:
            raise DomainError("moments need a one-dimensional decaying function")
        w = self.width
        mass = math.sqrt(math.pi) * w
        if self.family == "gaussian":
            return mass, mass * w * w / 2.0, mass * 3.0 * w**4 / 4.0
        b = w * w / 4.0
        k = self.frequency
        envelope = mass * math.exp(-b * k * k)
        m2 = envelope * (2.0 * b - 4.0 * b * b * k * k)
        m4 = envelope * (16.0 * b**4 * k**4 - 48.0 * b**3 * k * k + 12.0 * b * b)
        return envelope, m2, m4

    # -------------------------------------------------------------------------
    # Heat semigroup
    # -------------------------------------------------------------------------

    def heat(self, s: float, x: float | FloatArray) -> float:
        """(T_s f)(x) with T_s = exp(s Laplacian)."""
        return self.value(x) + self.heat_increment(s, x)

    def heat_increment(self, s: float, x: float | FloatArray) -> float:
        """(T_s f)(x) - f(x), accurate for small s."""
        if s < 0:
            raise DomainError(f"semigroup time must be >= 0, got {s}")
        z = self._offsets(np.atleast_1d(np.asarray(x, dtype=np.float64))[None, :])[0]
        r2 = float(z @ z)
        w2 = self.width**2
        k = self.frequency
        d = self.dimension
        match self.family:
            case "gaussian":
                exponent = -0.5 * d * math.log1p(4.0 * s / w2) + 4.0 * s * r2 / (
                    w2 * (w2 + 4.0 * s)
                )
                return math.exp(-r2 / w2) * math.expm1(exponent)
            case "modulated_gaussian":
                return self._modulated_increment(s, float(z[0]))
            case "cosine":
                return math.expm1(-s * k * k) * math.cos(k * z[0])
            case "quadratic":
                return 2.0 * d * s
        return 0.0

    def _modulated_increment(self, s: float, z: float) -> float:
        a = 1.0 / self.width**2
        k = self.frequency
        spread = 1.0 + 4.0 * a * s
        real = -0.5 * math.log1p(4.0 * a * s)
        real += (4.0 * a * s * a * z * z - s * k * k) / spread
        angle = -4.0 * a * s * k * z / spread
        # exp(x + iy) - 1 = expm1(x) e^{iy} + (e^{iy} - 1), without cancellation.
        turn = complex(-2.0 * math.sin(0.5 * angle) ** 2, math.sin(angle))
        increment = math.expm1(real) * cmath.exp(1j * angle) + turn
        start = math.exp(-a * z * z) * cmath.exp(1j * k * z)
        return (start * increment).real


__all__ = ["Family", "TestFunction"]
