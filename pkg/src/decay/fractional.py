"""Fractional moments of Green functions on trees and the backbone decay constant."""

import logging
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..disorder import DisorderLaw
from ..ensemble import mc_mean, realization_rng, run_realizations
from ..errors import ParameterError
from ..graphs import TreeGraph, build_canopy_truncation, build_regular_tree, leftmost_ray
from ..hamiltonian import default_boundary_mask
from ..resolvent import batched_diagonal, forward_sweep
from .fitting import DecayFit, fit_decay
from .lyapunov import sample_root_green

logger = logging.getLogger(__name__)


def _sample_diagonals(tree: TreeGraph, law: DisorderLaw, b: float, seed: int,
                      indices: np.ndarray) -> np.ndarray:
    boundary = b * default_boundary_mask(tree)
    return np.stack([law.sample(realization_rng(seed, int(r)), tree.vertex_count)
                     for r in indices]) + boundary


@dataclass(frozen=True)
class _RayMomentWorker:
    tree: TreeGraph
    law: DisorderLaw
    b: float
    seed: int
    z: complex
    s: float

    def __call__(self, indices: np.ndarray) -> list[np.ndarray]:
        ray = leftmost_ray(self.tree)
        diagonals = _sample_diagonals(self.tree, self.law, self.b, self.seed, indices)
        gamma, _ = forward_sweep(self.tree, diagonals - self.z)
        # |G(0, x_d)|^s = prod_{j <= d} |Gamma(x_j)|^s
        return list(np.cumprod(np.abs(gamma[:, ray]) ** self.s, axis=1))


def fractional_moment_decay(law: DisorderLaw, K: int, b: float, L: int, E: float, eta: float,
                            s: float, realizations: int, seed: int = 0, threads: int = 1) -> DecayFit:
    """Decay of E|G(0, x_d)|^s along the leftmost root-to-boundary ray of T_L.

    The slope is fitted over d >= 1 and compared with s ln sqrt(K), the rate
    of the disorder-free tree.

    Raises:
        ParameterError: If s is outside (0, 1)
    """
    if not 0 < s < 1:
        raise ParameterError(f"Fractional exponent must lie in (0, 1), got {s}")

    tree = build_regular_tree(K, L)
    worker = _RayMomentWorker(tree, law, float(b), int(seed), complex(E, eta), float(s))
    moments = np.asarray(run_realizations(worker, realizations, threads))
    mean, stderr = mc_mean(moments)

    distances = np.arange(L + 1)
    log_values = np.log(mean)
    log_stderr = stderr / mean
    start = 1 if L >= 2 else 0
    fit = fit_decay(distances[start:], log_values[start:], log_stderr[start:],
                    reference_rate=s * math.log(math.sqrt(K)))
    logger.info("Fractional moment decay s=%.2f: rate %.4f +- %.4f (reference %.4f)",
                s, fit.rate, fit.rate_stderr, fit.reference_rate)

    return DecayFit(
        distances=distances,
        log_values=log_values,
        log_stderr=log_stderr,
        rate=fit.rate,
        rate_stderr=fit.rate_stderr,
        intercept=fit.intercept,
        residuals=log_values - (fit.intercept - fit.rate * distances),
        reference_rate=fit.reference_rate,
    )


def estimate_moment_sup(law: DisorderLaw, K: int, b: float, s: float, energies: list[float],
                        L_list: list[int], eta: float, realizations: int, seed: int = 0,
                        threads: int = 1) -> tuple[float, pd.DataFrame]:
    """Empirical C_s: the largest MC mean of |G(0, 0; E + i eta)|^s over an (E, L) probe grid.

    Returns:
        Tuple of (supremum, DataFrame with columns E, L, moment, stderr)
    """
    energies = np.asarray(energies, dtype=float)
    rows = []
    for L in L_list:
        green = sample_root_green(law, K, b, int(L), energies + 1j * eta, realizations, seed, threads)
        mean, stderr = mc_mean(np.abs(green) ** s)
        for E, m, e in zip(energies, mean, stderr):
            rows.append({"E": float(E), "L": int(L), "moment": float(m), "stderr": float(e)})

    grid = pd.DataFrame(rows, columns=["E", "L", "moment", "stderr"])
    return float(grid["moment"].max()), grid


@dataclass(frozen=True)
class _LayerColumnWorker:
    tree: TreeGraph
    law: DisorderLaw
    b: float
    seed: int
    z: complex
    s: float
    layer: int

    def __call__(self, indices: np.ndarray) -> list[float]:
        diagonals = _sample_diagonals(self.tree, self.law, self.b, self.seed, indices)
        green = batched_diagonal(self.tree, diagonals, self.z)
        norms = green[:, self.tree.vertices_in_layer(self.layer)].imag / self.z.imag
        return list((norms ** self.s).mean(axis=1))


def canopy_column_moments(law: DisorderLaw, K: int, b: float, layer: int, L_list: list[int], E: float,
                          eta: float, s: float, realizations: int, seed: int = 0,
                          threads: int = 1) -> pd.DataFrame:
    """E[<delta_x, |H_{T_L} - E - i eta|^{-2} delta_x>^s] for x in a fixed canopy layer, per L.

    Returns:
        DataFrame with columns L, moment, stderr
    """
    if eta <= 0:
        raise ParameterError(f"Regularization must be positive, got eta = {eta}")
    rows = []
    for L in L_list:
        if layer > L:
            raise ParameterError(f"Layer {layer} does not exist in T_{L}")
        tree = build_canopy_truncation(K, int(L), b)
        worker = _LayerColumnWorker(tree, law, float(b), int(seed), complex(E, eta), float(s), int(layer))
        mean, stderr = mc_mean(np.asarray(run_realizations(worker, realizations, threads)))
        rows.append({"L": int(L), "moment": float(mean), "stderr": float(stderr)})
    return pd.DataFrame(rows, columns=["L", "moment", "stderr"])


def backbone_lambda_lower(s: float, E0: float, law: DisorderLaw, K_prime: int, Cs_estimate: float) -> float:
    """lambda(s, E_0) = 1 + log(1 + E_0 + E|omega|^s + K' C_s).

    Raises:
        ParameterError: If s exceeds min(tau, 1/2)
        DivergentMomentError: If E|omega|^s is infinite for the law

    Example:
        >>> from src.disorder import UniformLaw
        >>> round(backbone_lambda_lower(0.5, 0.0, UniformLaw(-0.5625, 0.5625), 1, 1.0), 6)
        2.252763
    """
    limit = min(law.tau, 0.5)
    if not 0 < s <= limit:
        raise ParameterError(f"Moment exponent must lie in (0, {limit}], got {s}")
    return 1.0 + math.log(1.0 + E0 + law.abs_moment(s) + K_prime * Cs_estimate)
