"""Finite-volume density of states, its layer decomposition and the Bethe-lattice average."""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..config import DosMethod, regular_tree_size
from ..ensemble import mc_mean
from ..errors import InsufficientDataError, MissingEigenvectorsError, ParameterError
from ..graphs import TreeGraph
from ..hamiltonian import OperatorSample
from ..resolvent import batched_diagonal
from ..spectral import EigenSystem

# Rows of potentials pushed through one batched resolvent sweep
STIELTJES_BATCH = 256


@dataclass(frozen=True)
class DosEstimate:
    """Density of states on an energy grid.

    ``tail_bound`` bounds the contribution of canopy layers beyond the last one
    resolved; it is zero for finite-volume estimates.
    """
    energy_grid: np.ndarray
    density: np.ndarray
    stderr: np.ndarray
    eta: float
    method: DosMethod
    tail_bound: float = 0.0


def finite_volume_dos(
    systems: Sequence[EigenSystem],
    volume: int | None = None,
    grid: np.ndarray | None = None,
    F: Callable[[np.ndarray], np.ndarray] | None = None,
) -> DosEstimate | float:
    """|T_L|^{-1} E[Tr F(H)], as a histogram density on bin edges or a scalar for a given F.

    Args:
        systems: Eigenvalue ensemble
        volume: Normalization; defaults to the matrix size
        grid: Bin edges for the histogram density
        F: Test function applied to eigenvalues; takes precedence over grid

    Raises:
        InsufficientDataError: If the ensemble is empty
        ParameterError: If neither grid nor F is given
    """
    if not systems:
        raise InsufficientDataError("Density of states of an empty ensemble")
    volume = volume or systems[0].size

    if F is not None:
        totals = [np.sum(F(eig.values)) / volume for eig in systems]
        return float(np.mean(totals))

    if grid is None:
        raise ParameterError("finite_volume_dos needs bin edges or a test function")

    edges = np.asarray(grid, dtype=float)
    widths = np.diff(edges)
    per_realization = np.array([np.histogram(eig.values, bins=edges)[0] / (volume * widths)
                                for eig in systems])
    density, stderr = mc_mean(per_realization)
    return DosEstimate(
        energy_grid=0.5 * (edges[:-1] + edges[1:]),
        density=density,
        stderr=stderr,
        eta=0.0,
        method=DosMethod.FINITE_VOLUME_HISTOGRAM,
    )


def layer_weights(K: int, L: int) -> np.ndarray:
    """Exact finite-volume weights K^{L-n}/|T_L| of the layers n = 0..L; they sum to one."""
    n = np.arange(L + 1)
    return K ** (L - n).astype(float) / regular_tree_size(K, L)


def layer_dos(systems: Sequence[EigenSystem], tree: TreeGraph, n: int,
              F: Callable[[np.ndarray], np.ndarray]) -> float:
    """Ensemble mean of the layer average |S_n|^{-1} sum_{x in S_n} <delta_x, F(H) delta_x>.

    S_n is the set of vertices at distance n from the outer boundary.

    Raises:
        ParameterError: If n exceeds the tree height
        MissingEigenvectorsError: If eigenvectors were not kept
    """
    if not 0 <= n <= tree.height:
        raise ParameterError(f"Layer must lie in 0..{tree.height}, got {n}")
    layer = tree.vertices_in_layer(n)

    values = []
    for eig in systems:
        if eig.vectors is None:
            raise MissingEigenvectorsError("Layer dos needs eigenvectors")
        weights = np.sum(eig.vectors[layer, :] ** 2, axis=0)
        values.append(float(weights @ F(eig.values)) / layer.shape[0])
    return float(np.mean(values))


def stieltjes_dos(ops: Sequence[OperatorSample], z: complex) -> tuple[float, float]:
    """|T_L|^{-1} E Tr Im (H - z)^{-1} from resolvent diagonals, with its MC standard error.

    All operators must live on the same tree.
    """
    if not ops:
        raise InsufficientDataError("Stieltjes dos of an empty ensemble")
    tree = ops[0].tree
    traces = []
    for start in range(0, len(ops), STIELTJES_BATCH):
        block = np.stack([op.diagonal for op in ops[start:start + STIELTJES_BATCH]])
        green = batched_diagonal(tree, block, z)
        traces.append(green.imag.mean(axis=1))
    mean, stderr = mc_mean(np.concatenate(traces))
    return float(mean), float(stderr)


def bethe_average(values: Sequence[float], K: int) -> tuple[float, np.ndarray]:
    """Surface-free per-site value (F_L - K F_{L-1})/2 on the homogeneous tree.

    Args:
        values: Extensive quantities F_L for consecutive L
        K: Forward branching number

    Returns:
        Tuple of (value at the largest L, the full sequence)

    Raises:
        InsufficientDataError: If fewer than two values are given

    Example:
        >>> bethe_average([1, 4, 10], 2)[0]
        1.0
    """
    values = np.asarray(values, dtype=float)
    if values.shape[0] < 2:
        raise InsufficientDataError(f"Bethe average needs two consecutive values, got {values.shape[0]}")
    sequence = (values[1:] - K * values[:-1]) / 2.0
    return float(sequence[-1]), sequence
