"""Random Hamiltonian H = A + V + B on trees, backbones and random regular graphs."""

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import sparse

from ..config import DENSE_CAP, TreeKind
from ..disorder import DisorderLaw
from ..ensemble import realization_rng
from ..errors import GraphSizeError, ParameterError
from ..graphs import BackboneGraph, SimpleGraph, TreeGraph

Graph = TreeGraph | BackboneGraph | SimpleGraph

# Tree kinds that carry the boundary term b by default
BOUNDARY_KINDS = {TreeKind.REGULAR, TreeKind.HOMOGENEOUS, TreeKind.CANOPY_TRUNCATION}


@dataclass(frozen=True, eq=False)
class OperatorSample:
    """One realization of H on a fixed graph.

    diagonal(x) = omega_x + b [x in boundary_mask]; off-diagonal entries are 1 on edges.
    """
    graph: Graph
    potential: np.ndarray
    b: float
    boundary_mask: np.ndarray
    realization_index: int = 0
    seed: int = 0

    @property
    def vertex_count(self) -> int:
        return int(self.potential.shape[0])

    @property
    def diagonal(self) -> np.ndarray:
        return self.potential + self.b * self.boundary_mask

    @property
    def tree(self) -> TreeGraph:
        """Underlying tree for tree-structured graphs."""
        return tree_of(self.graph)

    def edges(self) -> np.ndarray:
        return tree_of(self.graph).edges() if not isinstance(self.graph, SimpleGraph) else self.graph.edges()


def tree_of(graph: Graph) -> TreeGraph:
    if isinstance(graph, BackboneGraph):
        return graph.tree
    if isinstance(graph, TreeGraph):
        return graph
    raise ParameterError("Operation needs a tree-structured graph")


def default_boundary_mask(graph: Graph) -> np.ndarray:
    """Vertices that receive b: outer boundary of regular, homogeneous and canopy trees only."""
    if isinstance(graph, TreeGraph) and graph.kind in BOUNDARY_KINDS:
        return graph.is_boundary.copy()
    return np.zeros(graph.vertex_count, dtype=bool)


def _resolve_mask(graph: Graph, apply_boundary: bool | None) -> np.ndarray:
    if apply_boundary is None:
        return default_boundary_mask(graph)
    if apply_boundary:
        return np.asarray(graph.is_boundary if not isinstance(graph, BackboneGraph)
                          else graph.tree.is_boundary, dtype=bool).copy()
    return np.zeros(graph.vertex_count, dtype=bool)


def sample_operator(
    graph: Graph,
    law: DisorderLaw,
    b: float = 0.0,
    seed: int = 0,
    realization: int = 0,
    apply_boundary: bool | None = None,
) -> OperatorSample:
    """Draw one potential realization on ``graph``.

    Args:
        graph: Tree, backbone or random regular graph
        law: Single-site law
        b: Boundary constant
        seed: Master seed of the ensemble
        realization: Realization index; with seed it fixes the potential
        apply_boundary: Override of the default boundary convention

    Returns:
        OperatorSample with iid potential
    """
    rng = realization_rng(seed, realization)
    potential = law.sample(rng, graph.vertex_count)
    return OperatorSample(
        graph=graph,
        potential=potential,
        b=float(b),
        boundary_mask=_resolve_mask(graph, apply_boundary),
        realization_index=int(realization),
        seed=int(seed),
    )


def operator_with_potential(graph: Graph, potential: np.ndarray, b: float = 0.0,
                            apply_boundary: bool | None = None) -> OperatorSample:
    """OperatorSample with an explicitly given potential."""
    potential = np.asarray(potential, dtype=float)
    if potential.shape != (graph.vertex_count,):
        raise ParameterError(f"Potential has shape {potential.shape}, graph has {graph.vertex_count} vertices")
    return OperatorSample(graph=graph, potential=potential, b=float(b),
                          boundary_mask=_resolve_mask(graph, apply_boundary))


def to_sparse(op: OperatorSample) -> sparse.csr_matrix:
    n = op.vertex_count
    edges = op.edges()
    rows = np.concatenate((edges[:, 0], edges[:, 1], np.arange(n)))
    cols = np.concatenate((edges[:, 1], edges[:, 0], np.arange(n)))
    values = np.concatenate((np.ones(2 * edges.shape[0]), op.diagonal))
    return sparse.csr_matrix((values, (rows, cols)), shape=(n, n))


def to_dense(op: OperatorSample, dense_cap: int = DENSE_CAP) -> np.ndarray:
    """Dense symmetric matrix of H.

    Raises:
        GraphSizeError: If the vertex count exceeds dense_cap
    """
    n = op.vertex_count
    if n > dense_cap:
        raise GraphSizeError(f"Operator with {n} vertices exceeds dense cap {dense_cap}")
    matrix = np.zeros((n, n))
    edges = op.edges()
    matrix[edges[:, 0], edges[:, 1]] = 1.0
    matrix[edges[:, 1], edges[:, 0]] = 1.0
    matrix[np.diag_indices(n)] = op.diagonal
    return matrix


def apply(op: OperatorSample, v: np.ndarray) -> np.ndarray:
    """Matrix-free action (Hv)(x) = sum_{y~x} v(y) + diagonal(x) v(x)."""
    v = np.asarray(v)
    if v.shape[0] != op.vertex_count:
        raise ParameterError(f"Vector length {v.shape[0]} does not match {op.vertex_count} vertices")
    out = op.diagonal.reshape((-1,) + (1,) * (v.ndim - 1)) * v
    edges = op.edges()
    np.add.at(out, edges[:, 0], v[edges[:, 1]])
    np.add.at(out, edges[:, 1], v[edges[:, 0]])
    return out


def format_matrix(op: OperatorSample) -> str:
    """Coordinate-format text, one ``row col value`` line per stored entry in row-major order."""
    coo = to_sparse(op).tocoo()
    order = np.lexsort((coo.col, coo.row))
    lines = [f"{int(r)} {int(c)} {float(val)!r}" for r, c, val in zip(coo.row[order], coo.col[order], coo.data[order])]
    return "\n".join(lines) + "\n"


def dump_matrix(op: OperatorSample, filepath: Path) -> None:
    Path(filepath).write_text(format_matrix(op))
