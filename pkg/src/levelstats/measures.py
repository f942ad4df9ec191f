"""Negligibility, divisibility and eigenfunction-mass statistics at mean-spacing scale."""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..config import DENSE_CAP
from ..disorder import DisorderLaw
from ..ensemble import mc_mean, run_realizations
from ..errors import MissingEigenvectorsError, ParameterError
from ..graphs import TreeGraph, build_regular_tree
from ..hamiltonian import OperatorSample, sample_operator
from ..spectral import EigenSystem, diagonalize, rescaled_process, subtree_processes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _RootMassWorker:
    tree: TreeGraph
    law: DisorderLaw
    b: float
    seed: int
    E: float
    w: float
    dense_cap: int

    def __call__(self, indices: np.ndarray) -> list[float]:
        volume = self.tree.vertex_count
        interval = (self.E - self.w / volume, self.E + self.w / volume)
        out = []
        for r in indices:
            eig = diagonalize(sample_operator(self.tree, self.law, self.b, self.seed, int(r)),
                              keep_vectors=True, dense_cap=self.dense_cap)
            mask = (eig.values >= interval[0]) & (eig.values <= interval[1])
            out.append(volume * float(np.sum(eig.vectors[self.tree.root, mask] ** 2)))
        return out


def negligibility_curve(law: DisorderLaw, K: int, b: float, E: float, w: float, epsilon: float,
                        L_list: list[int], realizations: int, seed: int = 0, threads: int = 1,
                        dense_cap: int = DENSE_CAP) -> pd.DataFrame:
    """P(|T_L| sigma_{0,L}(E +- w/|T_L|) > epsilon) per depth L.

    Args:
        law: Single-site law
        K: Branching number
        b: Boundary constant
        E: Center energy
        w: Half-width of the window in mean-spacing units
        epsilon: Threshold
        L_list: Depths to scan
        realizations: Samples per depth; the same indices are used at every L

    Returns:
        DataFrame with columns L, probability, stderr (binomial)
    """
    rows = []
    for L in L_list:
        tree = build_regular_tree(K, int(L))
        if w <= 0:
            rows.append({"L": int(L), "probability": 0.0, "stderr": 0.0})
            continue

        worker = _RootMassWorker(tree, law, float(b), int(seed), float(E), float(w), dense_cap)
        masses = np.asarray(run_realizations(worker, realizations, threads))
        p = float(np.mean(masses > epsilon))
        rows.append({"L": int(L), "probability": p, "stderr": float(np.sqrt(p * (1.0 - p) / len(masses)))})
        logger.info("Negligibility L=%d: P = %.4f", L, p)

    return pd.DataFrame(rows, columns=["L", "probability", "stderr"])


def stieltjes_functional(points: np.ndarray, z: complex) -> float:
    """mu(phi_z) = sum over points of Im 1/(p - z)."""
    return float(np.sum((1.0 / (np.asarray(points) - z)).imag))


def divisibility_gap(ops: list[OperatorSample], N: int, E: float, z: complex) -> float:
    """|E exp(-sum_x mu_{x,L}(phi_z)) - E exp(-mu_L(phi_z))| over the ensemble.

    Subtree processes are rooted at distance N and rescaled by the full volume.

    Raises:
        ParameterError: If Im z <= 0
    """
    z = complex(z)
    if z.imag <= 0:
        raise ParameterError(f"Test point needs Im z > 0, got {z}")
    if N == 0:
        return 0.0

    full_terms, split_terms = [], []
    for op in ops:
        volume = op.vertex_count
        full = rescaled_process(diagonalize(op), E, volume, np.inf)
        pieces = subtree_processes(op, N, E, np.inf)
        full_terms.append(np.exp(-stieltjes_functional(full.points, z)))
        split_terms.append(np.exp(-sum(stieltjes_functional(p.points, z) for p in pieces)))

    return float(abs(np.mean(split_terms) - np.mean(full_terms)))


def eigenfunction_mass_statistic(systems: list[EigenSystem], x: int, interval: tuple[float, float],
                                 epsilon: float, volume: int | None = None) -> tuple[float, float]:
    """Mean and stderr of #{n : E_n in I, |psi_n(x)|^2 >= epsilon / volume}.

    Raises:
        MissingEigenvectorsError: If any system lacks eigenvectors
    """
    lo, hi = interval
    counts = []
    for eig in systems:
        if eig.vectors is None:
            raise MissingEigenvectorsError("Eigenfunction mass statistic needs eigenvectors")
        n = volume or eig.size
        mask = (eig.values >= lo) & (eig.values <= hi)
        counts.append(np.count_nonzero(eig.vectors[x, mask] ** 2 >= epsilon / n))
    mean, stderr = mc_mean(np.asarray(counts, dtype=float))
    return float(mean), float(stderr)
