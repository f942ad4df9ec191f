"""Base class for single-site disorder laws."""

from abc import ABC, abstractmethod
from typing import Any

import numpy as np
from scipy import integrate

from ..config import DistributionType

# Relative tolerance of the adaptive quadrature fallback for moments
MOMENT_RTOL = 1e-8


class DisorderLaw(ABC):
    """Distribution of the iid potential variables omega_x.

    Subclasses are immutable dataclasses; ``tau`` is the moment exponent for
    which the law satisfies the finite-moment assumption.
    """

    family: DistributionType
    tau: float

    @abstractmethod
    def density(self, omega: np.ndarray | float) -> np.ndarray | float:
        """Probability density rho(omega)."""

    @abstractmethod
    def density_sup(self) -> float:
        """Closed-form sup-norm of the density."""

    @abstractmethod
    def char_modulus(self, xi: np.ndarray | float) -> np.ndarray | float:
        """|rho_hat(xi)| for rho_hat(xi) = int e^{-i xi omega} rho(omega) d omega."""

    @abstractmethod
    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """n iid draws from the law."""

    @abstractmethod
    def cdf(self, x: np.ndarray | float) -> np.ndarray | float:
        pass

    @abstractmethod
    def quantile(self, p: np.ndarray | float) -> np.ndarray | float:
        pass

    @abstractmethod
    def parameters(self) -> dict[str, float]:
        """Parameters as written to configs and summaries."""

    def support(self) -> tuple[float, float]:
        return (-np.inf, np.inf)

    def center(self) -> float:
        return 0.0

    def abs_moment(self, tau: float) -> float:
        """int |omega|^tau rho(omega) d omega by adaptive quadrature.

        Subclasses override this with closed forms where they exist.
        """
        if tau <= 0:
            raise ValueError(f"Moment exponent must be positive, got {tau}")

        def integrand(w):
            return abs(w) ** tau * self.density(w)

        lo, hi = self.support()
        breaks = sorted({lo, min(max(0.0, lo), hi), min(max(self.center(), lo), hi), hi})
        total = 0.0
        for left, right in zip(breaks, breaks[1:]):
            if right > left:
                value, _ = integrate.quad(integrand, left, right, epsrel=MOMENT_RTOL, limit=200)
                total += value
        return total

    def char_sup_beyond(self, eta: float) -> float:
        """sup_{|xi| > eta} |rho_hat(xi)|, evaluated on a fine grid."""
        xi = eta + np.linspace(0.0, 400.0, 400_001)
        return float(np.max(self.char_modulus(xi)))

    def describe(self) -> dict[str, Any]:
        return {"type": self.family.value, **self.parameters()}
