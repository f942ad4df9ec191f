"""Canopy density of states: Monte Carlo on truncations and the exact Cauchy recursion."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_N_MAX, FIXED_POINT_MAX_ITER, DosMethod
from ..disorder import DisorderLaw
from ..ensemble import mc_mean, realization_rng, run_realizations
from ..errors import ConvergenceError, ParameterError, UnsupportedLawError
from ..graphs import TreeGraph, build_canopy_truncation
from ..resolvent import batched_diagonal
from .finite_volume import DosEstimate

logger = logging.getLogger(__name__)

# Convergence tolerance of the layer and self-energy fixed points
FIXED_POINT_TOL = 1e-13


def canopy_weights(K: int, n_max: int) -> np.ndarray:
    """(K-1)/K K^{-n} for n < n_max and the tail mass K^{-n_max} on layer n_max.

    Example:
        >>> canopy_weights(2, 2).tolist()
        [0.5, 0.25, 0.25]
    """
    if n_max < 0:
        raise ParameterError(f"n_max must be >= 0, got {n_max}")
    n = np.arange(n_max + 1, dtype=float)
    weights = (K - 1) / K * float(K) ** (-n)
    weights[-1] = float(K) ** (-n_max)
    return weights


@dataclass(frozen=True)
class _CanopyLayerWorker:
    tree: TreeGraph
    law: DisorderLaw
    b: float
    seed: int
    energies: np.ndarray
    n_max: int

    def __call__(self, indices: np.ndarray) -> list[np.ndarray]:
        n = self.tree.vertex_count
        diagonals = np.stack([
            self.law.sample(realization_rng(self.seed, int(r)), n) for r in indices
        ]) + self.b * self.tree.is_boundary
        layers = [self.tree.vertices_in_layer(m) for m in range(self.n_max + 1)]

        means = np.empty((len(indices), self.n_max + 1, self.energies.shape[0]))
        for k, z in enumerate(self.energies):
            im_green = batched_diagonal(self.tree, diagonals, z).imag
            for m, layer in enumerate(layers):
                means[:, m, k] = im_green[:, layer].mean(axis=1)
        return list(means)


def canopy_layer_means(K: int, law: DisorderLaw, b: float, energies: np.ndarray, depth: int,
                       n_max: int, realizations: int, seed: int = 0, threads: int = 1) -> np.ndarray:
    """Per-realization layer averages of Im G(x, x; z) on the depth-D canopy truncation.

    Returns:
        Array of shape (realizations, n_max + 1, len(energies))
    """
    if n_max > depth:
        raise ParameterError(f"n_max = {n_max} exceeds truncation depth {depth}")
    tree = build_canopy_truncation(K, depth, b)
    worker = _CanopyLayerWorker(tree, law, float(b), int(seed),
                                np.asarray(energies, dtype=complex), int(n_max))
    return np.asarray(run_realizations(worker, realizations, threads))


def canopy_dos_mc(
    K: int,
    law: DisorderLaw,
    b: float,
    grid: np.ndarray,
    eta: float,
    depth: int,
    n_max: int = DEFAULT_N_MAX,
    realizations: int = 1000,
    seed: int = 0,
    threads: int = 1,
) -> DosEstimate:
    """Monte Carlo canopy dos pi^{-1} sum_n w_n E[Im G(x_n, x_n; E + i eta)].

    Layers beyond n_max carry at most K^{-n_max} ||rho||_inf, reported as tail_bound.

    Raises:
        ParameterError: If eta <= 0 or n_max > depth
    """
    if eta <= 0:
        raise ParameterError(f"Regularization must be positive, got eta = {eta}")

    grid = np.asarray(grid, dtype=float)
    means = canopy_layer_means(K, law, b, grid + 1j * eta, depth, n_max, realizations, seed, threads)
    weighted = np.einsum("m,rmk->rk", canopy_weights(K, n_max), means) / math.pi
    density, stderr = mc_mean(weighted)

    try:
        tail = float(K) ** (-n_max) * law.density_sup()
    except UnsupportedLawError:
        tail = math.nan

    logger.info("Canopy dos on %d energies from %d realizations (depth %d, n_max %d)",
                grid.shape[0], realizations, depth, n_max)
    return DosEstimate(energy_grid=grid, density=density, stderr=stderr, eta=float(eta),
                       method=DosMethod.MC_CANOPY, tail_bound=tail)


def _iterate(update, start: np.ndarray, what: str) -> np.ndarray:
    value = start
    for _ in range(FIXED_POINT_MAX_ITER):
        new = update(value)
        if np.max(np.abs(new - value)) < FIXED_POINT_TOL:
            return new
        value = new
    raise ConvergenceError(f"{what} did not converge within {FIXED_POINT_MAX_ITER} iterations")


def canopy_green_exact_cauchy(
    K: int,
    c: float,
    gamma: float,
    b: float,
    z: complex | np.ndarray,
    n_max: int = DEFAULT_N_MAX,
    depth: int | None = None,
) -> np.ndarray:
    """Disorder-averaged layer diagonals E G(x_n, x_n; z), n = 0..n_max, for Cauchy(c, gamma) disorder.

    The average equals the Green function of the constant potential c at
    z + i gamma. depth=None closes the top with the infinite-canopy
    self-energy; an integer depth leaves the top vertex of T_depth free.

    Returns:
        Array of shape (n_max + 1,) + shape of z

    Raises:
        ParameterError: If gamma <= 0 or n_max > depth
        ConvergenceError: If a fixed point does not converge
    """
    if gamma <= 0:
        raise ParameterError(f"Cauchy width must be positive, got {gamma}")
    if depth is not None and n_max > depth:
        raise ParameterError(f"n_max = {n_max} exceeds truncation depth {depth}")

    shifted = np.asarray(z, dtype=complex) + 1j * gamma
    base = c - shifted

    # forward gammas by layer
    forward = [1.0 / (base + b)]
    if depth is None:
        while True:
            nxt = 1.0 / (base - K * forward[-1])
            forward.append(nxt)
            if len(forward) > n_max + 1 and np.max(np.abs(nxt - forward[-2])) < FIXED_POINT_TOL:
                break
            if len(forward) > FIXED_POINT_MAX_ITER:
                raise ConvergenceError("Canopy forward recursion did not converge")
        top = len(forward) - 1
        g_inf = forward[-1]
        sigma = _iterate(lambda s: 1.0 / (base - (K - 1) * g_inf - s), np.zeros_like(base),
                         "Canopy self-energy")
    else:
        for _ in range(depth):
            forward.append(1.0 / (base - K * forward[-1]))
        top = depth
        sigma = np.zeros_like(base)

    # parent-side self-energies from the top layer down
    sigmas = [None] * (top + 1)
    sigmas[top] = sigma
    for m in range(top - 1, -1, -1):
        sigmas[m] = 1.0 / (base - (K - 1) * forward[m] - sigmas[m + 1])

    green = []
    for m in range(n_max + 1):
        diagonal = base + b if m == 0 else base - K * forward[m - 1]
        green.append(1.0 / (diagonal - sigmas[m]))
    return np.array(green)


def canopy_dos_exact_cauchy(
    K: int,
    c: float,
    gamma: float,
    b: float,
    grid: np.ndarray,
    eta: float,
    depth: int | None = None,
    n_max: int = DEFAULT_N_MAX,
) -> DosEstimate:
    """Canopy dos for Cauchy disorder from the deterministic layer recursion."""
    grid = np.asarray(grid, dtype=float)
    green = canopy_green_exact_cauchy(K, c, gamma, b, grid + 1j * eta, n_max=n_max, depth=depth)
    density = canopy_weights(K, n_max) @ green.imag / math.pi
    return DosEstimate(
        energy_grid=grid,
        density=density,
        stderr=np.zeros_like(density),
        eta=float(eta),
        method=DosMethod.EXACT_CAUCHY,
        tail_bound=float(K) ** (-n_max) / (math.pi * gamma),
    )
