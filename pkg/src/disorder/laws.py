"""Concrete disorder laws: Cauchy, uniform, Gaussian and constant."""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from ..config import DistributionType
from ..errors import DivergentMomentError, ParameterError, UnsupportedLawError
from .base import DisorderLaw


@dataclass(frozen=True)
class CauchyLaw(DisorderLaw):
    """Cauchy law with center c and scale gamma.

    Every moment of order tau < 1 is finite; 1/2 is used as the default exponent.
    """
    center_value: float = 0.0
    scale: float = 1.0
    tau: float = 0.5

    family = DistributionType.CAUCHY

    def __post_init__(self):
        if self.scale <= 0:
            raise ParameterError(f"Cauchy scale must be positive, got {self.scale}")
        if not 0 < self.tau < 1:
            raise ParameterError(f"Cauchy moment exponent must lie in (0, 1), got {self.tau}")

    def density(self, omega):
        shifted = np.asarray(omega, dtype=float) - self.center_value
        return self.scale / (math.pi * (shifted**2 + self.scale**2))

    def density_sup(self) -> float:
        return 1.0 / (math.pi * self.scale)

    def abs_moment(self, tau: float) -> float:
        if tau >= 1:
            raise DivergentMomentError(f"Cauchy law has no absolute moment of order {tau} >= 1")
        if self.center_value == 0.0:
            return self.scale**tau / math.cos(math.pi * tau / 2)
        return super().abs_moment(tau)

    def char_modulus(self, xi):
        return np.exp(-self.scale * np.abs(xi))

    def char_sup_beyond(self, eta: float) -> float:
        return math.exp(-self.scale * eta)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        u = rng.random(n)
        return self.center_value + self.scale * np.tan(math.pi * (u - 0.5))

    def cdf(self, x):
        return 0.5 + np.arctan((np.asarray(x, dtype=float) - self.center_value) / self.scale) / math.pi

    def quantile(self, p):
        return self.center_value + self.scale * np.tan(math.pi * (np.asarray(p, dtype=float) - 0.5))

    def center(self) -> float:
        return self.center_value

    def parameters(self) -> dict[str, float]:
        return {"p1": self.center_value, "p2": self.scale}


@dataclass(frozen=True)
class UniformLaw(DisorderLaw):
    """Uniform law on [a, b]."""
    a: float = 0.0
    b: float = 1.0
    tau: float = 2.0

    family = DistributionType.UNIFORM

    def __post_init__(self):
        if not self.b > self.a:
            raise ParameterError(f"Uniform law needs a < b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a

    def density(self, omega):
        omega = np.asarray(omega, dtype=float)
        inside = (omega >= self.a) & (omega <= self.b)
        return np.where(inside, 1.0 / self.width, 0.0)

    def density_sup(self) -> float:
        return 1.0 / self.width

    def abs_moment(self, tau: float) -> float:
        if tau <= 0:
            raise ValueError(f"Moment exponent must be positive, got {tau}")

        def antiderivative(x):
            return math.copysign(abs(x) ** (tau + 1), x) / (tau + 1)

        return (antiderivative(self.b) - antiderivative(self.a)) / self.width

    def char_modulus(self, xi):
        return np.abs(np.sinc(np.asarray(xi, dtype=float) * self.width / (2 * math.pi)))

    def char_sup_beyond(self, eta: float) -> float:
        # |sin x / x| with x = xi * width / 2; beyond the grid the envelope 1/x is below 2e-3
        x0 = eta * self.width / 2
        x = x0 + np.linspace(0.0, 160 * math.pi, 400_001)
        return float(np.max(np.abs(np.sinc(x / math.pi))))

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.uniform(self.a, self.b, n)

    def cdf(self, x):
        return np.clip((np.asarray(x, dtype=float) - self.a) / self.width, 0.0, 1.0)

    def quantile(self, p):
        return self.a + np.asarray(p, dtype=float) * self.width

    def support(self) -> tuple[float, float]:
        return (self.a, self.b)

    def center(self) -> float:
        return 0.5 * (self.a + self.b)

    def parameters(self) -> dict[str, float]:
        return {"p1": self.a, "p2": self.b}


@dataclass(frozen=True)
class GaussianLaw(DisorderLaw):
    """Gaussian law with given mean and variance."""
    mean: float = 0.0
    variance: float = 1.0
    tau: float = 2.0

    family = DistributionType.GAUSSIAN

    def __post_init__(self):
        if self.variance <= 0:
            raise ParameterError(f"Gaussian variance must be positive, got {self.variance}")

    @property
    def sigma(self) -> float:
        return math.sqrt(self.variance)

    def density(self, omega):
        shifted = np.asarray(omega, dtype=float) - self.mean
        return np.exp(-shifted**2 / (2 * self.variance)) / math.sqrt(2 * math.pi * self.variance)

    def density_sup(self) -> float:
        return 1.0 / math.sqrt(2 * math.pi * self.variance)

    def abs_moment(self, tau: float) -> float:
        if tau <= 0:
            raise ValueError(f"Moment exponent must be positive, got {tau}")
        if self.mean == 0.0:
            return self.sigma**tau * 2 ** (tau / 2) * special.gamma((tau + 1) / 2) / math.sqrt(math.pi)
        return super().abs_moment(tau)

    def char_modulus(self, xi):
        return np.exp(-self.variance * np.asarray(xi, dtype=float) ** 2 / 2)

    def char_sup_beyond(self, eta: float) -> float:
        return math.exp(-self.variance * eta**2 / 2)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.normal(self.mean, self.sigma, n)

    def cdf(self, x):
        return stats.norm.cdf(x, loc=self.mean, scale=self.sigma)

    def quantile(self, p):
        return stats.norm.ppf(p, loc=self.mean, scale=self.sigma)

    def center(self) -> float:
        return self.mean

    def parameters(self) -> dict[str, float]:
        return {"p1": self.mean, "p2": self.variance}


@dataclass(frozen=True)
class ConstantLaw(DisorderLaw):
    """Point mass at v; a deterministic potential, used for oracle checks."""
    value: float = 0.0
    tau: float = 2.0

    family = DistributionType.CONSTANT

    def density(self, omega):
        raise UnsupportedLawError("Constant law has no density")

    def density_sup(self) -> float:
        raise UnsupportedLawError("Constant law has no density")

    def abs_moment(self, tau: float) -> float:
        if tau <= 0:
            raise ValueError(f"Moment exponent must be positive, got {tau}")
        return abs(self.value) ** tau

    def char_modulus(self, xi):
        return np.ones_like(np.asarray(xi, dtype=float))

    def char_sup_beyond(self, eta: float) -> float:
        return 1.0

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return np.full(n, float(self.value))

    def cdf(self, x):
        return np.where(np.asarray(x, dtype=float) >= self.value, 1.0, 0.0)

    def quantile(self, p):
        return np.full_like(np.asarray(p, dtype=float), float(self.value))

    def center(self) -> float:
        return self.value

    def parameters(self) -> dict[str, float]:
        return {"p1": self.value, "p2": 0.0}
