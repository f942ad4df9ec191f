"""Finite-volume Lyapunov exponents, relative widths and the Lyapunov lower bound."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..disorder import DisorderLaw
from ..ensemble import mc_mean, realization_rng, run_realizations
from ..errors import InsufficientDataError, ParameterError
from ..graphs import TreeGraph, build_regular_tree
from ..hamiltonian import default_boundary_mask
from ..resolvent import batched_root_green

logger = logging.getLogger(__name__)

MIN_LYAPUNOV_REALIZATIONS = 100

# Quantile levels scanned by the lower bound
DEFAULT_ALPHA_GRID = (0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5)


@dataclass(frozen=True)
class _RootGreenWorker:
    tree: TreeGraph
    law: DisorderLaw
    b: float
    seed: int
    energies: np.ndarray

    def __call__(self, indices: np.ndarray) -> list[np.ndarray]:
        n = self.tree.vertex_count
        boundary = self.b * default_boundary_mask(self.tree)
        diagonals = np.stack([
            self.law.sample(realization_rng(self.seed, int(r)), n) for r in indices
        ]) + boundary
        out = np.empty((len(indices), self.energies.shape[0]), dtype=complex)
        for k, z in enumerate(self.energies):
            out[:, k] = batched_root_green(self.tree, diagonals, z)
        return list(out)


def sample_root_green(law: DisorderLaw, K: int, b: float, L: int, energies: np.ndarray,
                      realizations: int, seed: int = 0, threads: int = 1) -> np.ndarray:
    """G(0, 0; z) on T_L for every realization and energy.

    Returns:
        Complex array of shape (realizations, len(energies))
    """
    tree = build_regular_tree(K, L)
    worker = _RootGreenWorker(tree, law, float(b), int(seed), np.atleast_1d(np.asarray(energies, dtype=complex)))
    return np.asarray(run_realizations(worker, realizations, threads))


def lyapunov_finite(law: DisorderLaw, K: int, b: float, L: int, E: float, eta: float,
                    realizations: int, seed: int = 0, threads: int = 1) -> tuple[float, float]:
    """gamma_L(E + i eta) = -E[ln(sqrt(K) |G(0, 0)|)] with its MC standard error.

    Example:
        >>> from src.disorder import ConstantLaw
        >>> round(lyapunov_finite(ConstantLaw(0.0), 2, 0.0, 0, 0.0, 1.0, 1)[0], 6)
        -0.346574
    """
    if realizations < MIN_LYAPUNOV_REALIZATIONS:
        logger.warning("Lyapunov estimate from %d realizations (recommended >= %d)",
                       realizations, MIN_LYAPUNOV_REALIZATIONS)
    green = sample_root_green(law, K, b, L, [E + 1j * eta], realizations, seed, threads)[:, 0]
    values = -np.log(math.sqrt(K) * np.abs(green))
    mean, stderr = mc_mean(values)
    return float(mean), float(stderr)


@dataclass(frozen=True)
class WidthQuantiles:
    alpha: float
    xi_minus: float
    xi_plus: float

    @property
    def delta(self) -> float:
        """Relative width 1 - xi_minus / xi_plus."""
        return 1.0 - self.xi_minus / self.xi_plus


def _check_alpha(alpha: float) -> None:
    if not 0 < alpha <= 0.5:
        raise ParameterError(f"alpha must lie in (0, 1/2], got {alpha}")


def relative_width(samples: np.ndarray, alpha: float) -> WidthQuantiles:
    """Empirical relative alpha-width of a positive random variable.

    xi_- is the largest xi with empirical P(X < xi) <= alpha, xi_+ the smallest
    xi with empirical P(X > xi) <= alpha.

    Raises:
        InsufficientDataError: If samples is empty
        ParameterError: If a sample is not positive or alpha is out of range
    """
    _check_alpha(alpha)
    samples = np.sort(np.asarray(samples, dtype=float).ravel())
    n = samples.shape[0]
    if n == 0:
        raise InsufficientDataError("Relative width of an empty sample")
    if samples[0] <= 0:
        raise ParameterError(f"Relative width needs positive samples, got minimum {samples[0]}")

    k = min(int(math.floor(alpha * n)), n - 1)
    lo, hi = samples[k], samples[n - 1 - k]
    return WidthQuantiles(alpha=float(alpha), xi_minus=float(min(lo, hi)), xi_plus=float(max(lo, hi)))


def law_relative_width(law: DisorderLaw, alpha: float) -> WidthQuantiles:
    """Relative alpha-width of a positive law from its quantile function."""
    _check_alpha(alpha)
    lo, hi = float(law.quantile(alpha)), float(law.quantile(1.0 - alpha))
    if lo <= 0:
        raise ParameterError(f"Law {law.describe()} is not positive at its {alpha}-quantile")
    return WidthQuantiles(alpha=float(alpha), xi_minus=lo, xi_plus=hi)


@dataclass(frozen=True)
class LyapunovLowerBound:
    width_bound: float
    width_alpha: float
    closed_form_bound: float
    closed_form_alpha: float

    @property
    def value(self) -> float:
        return max(self.width_bound, self.closed_form_bound)


def lyapunov_lower_bound(gamma0_samples: np.ndarray, K: int, rho_sup: float | None, tau: float,
                         alpha_grid: tuple[float, ...] = DEFAULT_ALPHA_GRID) -> LyapunovLowerBound:
    """Two lower bounds on the Lyapunov exponent from draws of |Gamma_0(z)|^{-2}.

    The width bound is alpha^2/(32(K+1)^2) delta(|Gamma_0|^{-2}, alpha)^2; the
    closed form is alpha^2/(32(K+1)^2) min{1, (1-2 alpha)/(2 ||rho||_inf)}
    (alpha / E|Gamma_0|^{-tau})^{2/tau}. Both are maximized over alpha_grid.
    A degenerate sample (no spread) has zero width, so only the closed form survives.

    Raises:
        InsufficientDataError: If samples is empty
    """
    samples = np.asarray(gamma0_samples, dtype=float).ravel()
    if samples.size == 0:
        raise InsufficientDataError("Lyapunov lower bound needs samples")

    prefactor = 1.0 / (32.0 * (K + 1) ** 2)
    degenerate = bool(np.ptp(samples) == 0)
    has_density = rho_sup is not None and math.isfinite(rho_sup)
    moment = float(np.mean(samples ** (tau / 2.0)))

    best_width, width_alpha = 0.0, float(alpha_grid[0])
    best_closed, closed_alpha = 0.0, float(alpha_grid[0])
    for alpha in alpha_grid:
        if not degenerate:
            width = prefactor * alpha ** 2 * relative_width(samples, alpha).delta ** 2
            if width > best_width:
                best_width, width_alpha = width, float(alpha)
        if has_density:
            closed = (prefactor * alpha ** 2 * min(1.0, (1.0 - 2.0 * alpha) / (2.0 * rho_sup))
                      * (alpha / moment) ** (2.0 / tau))
            if closed > best_closed:
                best_closed, closed_alpha = closed, float(alpha)

    return LyapunovLowerBound(width_bound=best_width, width_alpha=width_alpha,
                              closed_form_bound=best_closed, closed_form_alpha=closed_alpha)
