"""Exact diagonalization, rescaled eigenvalue processes and spectral measures."""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy import linalg

from ..config import DEFAULT_WINDOW, DENSE_CAP
from ..ensemble import run_realizations
from ..errors import GraphSizeError, MissingEigenvectorsError, ParameterError
from ..graphs import subtree
from ..disorder import DisorderLaw
from ..hamiltonian import Graph, OperatorSample, operator_with_potential, sample_operator, to_dense

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues with multiplicity and, optionally, orthonormal eigenvectors as columns."""
    values: np.ndarray
    vectors: np.ndarray | None = None
    realization: int = 0

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    def count_in(self, interval: tuple[float, float]) -> int:
        lo, hi = interval
        return int(np.count_nonzero((self.values >= lo) & (self.values <= hi)))


@dataclass(frozen=True)
class RescaledPointProcess:
    """Points volume * (E_n - E) with |point| <= window, sorted."""
    center_energy: float
    volume: int
    points: np.ndarray
    window: float
    realization: int = 0

    def count_in(self, interval: tuple[float, float]) -> int:
        lo, hi = interval
        return int(np.count_nonzero((self.points >= lo) & (self.points <= hi)))


def diagonalize(op: OperatorSample, keep_vectors: bool = False, dense_cap: int = DENSE_CAP) -> EigenSystem:
    """Dense symmetric eigendecomposition of H.

    Args:
        op: Operator sample on any graph family
        keep_vectors: Also return the eigenvector matrix
        dense_cap: Largest vertex count accepted

    Returns:
        EigenSystem with ascending eigenvalues

    Raises:
        GraphSizeError: If the operator exceeds dense_cap
    """
    matrix = to_dense(op, dense_cap)
    logger.debug("Diagonalizing %d x %d operator (realization %d)",
                 matrix.shape[0], matrix.shape[0], op.realization_index)
    if keep_vectors:
        values, vectors = linalg.eigh(matrix)
        return EigenSystem(values=values, vectors=vectors, realization=op.realization_index)
    return EigenSystem(values=linalg.eigvalsh(matrix), realization=op.realization_index)


def rescaled_process(eig: EigenSystem, E: float, volume: int,
                     window: float = DEFAULT_WINDOW) -> RescaledPointProcess:
    """Eigenvalues near E magnified by the volume.

    Example:
        >>> rescaled_process(EigenSystem(values=np.array([0.5])), 0.5, 10, 3.0).points
        array([0.])
    """
    if window <= 0:
        raise ParameterError(f"Window must be positive, got {window}")
    points = volume * (eig.values - E)
    points = np.sort(points[np.abs(points) <= window])
    return RescaledPointProcess(center_energy=float(E), volume=int(volume), points=points,
                                window=float(window), realization=eig.realization)


def spectral_measure(source: EigenSystem | OperatorSample, x: int, interval: tuple[float, float]) -> float:
    """sigma_x(I) = sum over E_n in I of |psi_n(x)|^2.

    Raises:
        MissingEigenvectorsError: If an EigenSystem without vectors is given
    """
    eig = diagonalize(source, keep_vectors=True) if isinstance(source, OperatorSample) else source
    if eig.vectors is None:
        raise MissingEigenvectorsError("Spectral measure needs eigenvectors; diagonalize with keep_vectors")
    lo, hi = interval
    mask = (eig.values >= lo) & (eig.values <= hi)
    return float(np.sum(np.abs(eig.vectors[x, mask]) ** 2))


def subtree_processes(op: OperatorSample, N: int, E: float, window: float = DEFAULT_WINDOW,
                      dense_cap: int = DENSE_CAP) -> list[RescaledPointProcess]:
    """Processes of the forward subtrees rooted at distance N, each rescaled by the FULL volume.

    Every subtree operator is the restriction of ``op`` (same potential and
    boundary term), so the processes are independent across subtrees.

    Raises:
        ParameterError: If N exceeds the tree height
    """
    tree = op.tree
    if not 0 <= N <= tree.height:
        raise ParameterError(f"Subtree distance must lie in 0..{tree.height}, got {N}")

    volume = op.vertex_count
    if N == 0:
        return [rescaled_process(diagonalize(op, dense_cap=dense_cap), E, volume, window)]

    diagonal = op.diagonal
    processes = []
    for x in tree.vertices_at_depth(N):
        sub, vertex_map = subtree(tree, int(x))
        restricted = operator_with_potential(sub, diagonal[vertex_map], b=0.0, apply_boundary=False)
        eig = EigenSystem(values=diagonalize(restricted, dense_cap=dense_cap).values,
                          realization=op.realization_index)
        processes.append(rescaled_process(eig, E, volume, window))
    return processes


def eigenvalue_frame(systems: list[EigenSystem]) -> pd.DataFrame:
    """Long-format eigenvalue dump with columns realization, n, energy."""
    frames = [
        pd.DataFrame({
            "realization": np.full(eig.size, eig.realization, dtype=np.int64),
            "n": np.arange(eig.size, dtype=np.int64),
            "energy": eig.values,
        })
        for eig in systems
    ]
    if not frames:
        return pd.DataFrame(columns=["realization", "n", "energy"])
    return pd.concat(frames, ignore_index=True)


@dataclass(frozen=True)
class _DiagonalizeWorker:
    graph: Graph
    law: DisorderLaw
    b: float
    seed: int
    keep_vectors: bool
    dense_cap: int

    def __call__(self, indices: np.ndarray) -> list[EigenSystem]:
        return [
            diagonalize(sample_operator(self.graph, self.law, self.b, self.seed, int(r)),
                        keep_vectors=self.keep_vectors, dense_cap=self.dense_cap)
            for r in indices
        ]


def diagonalize_ensemble(graph: Graph, law: DisorderLaw, b: float, seed: int, realizations: int,
                         keep_vectors: bool = False,
                         threads: int = 1, dense_cap: int = DENSE_CAP) -> list[EigenSystem]:
    """EigenSystems of realizations 0..realizations-1, in index order."""
    if graph.vertex_count > dense_cap:
        raise GraphSizeError(f"Operator with {graph.vertex_count} vertices exceeds dense cap {dense_cap}")
    worker = _DiagonalizeWorker(graph, law, float(b), int(seed), keep_vectors, dense_cap)
    return run_realizations(worker, realizations, threads)
