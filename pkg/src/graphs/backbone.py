"""Decorated backbone graphs: a path with a regular tree hung off every site."""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..config import TreeKind, regular_tree_size
from ..errors import ParameterError
from .trees import TreeGraph, build_regular_tree, tree_from_parents


@dataclass(frozen=True, eq=False)
class BackboneGraph:
    """Tree with a distinguished backbone path x_0, x_1, ..., x_N.

    Site x_n is joined by one extra edge to the root of a regular tree of depth
    decoration_depth[n]; the whole graph is stored as a TreeGraph rooted at x_0.
    """
    tree: TreeGraph
    backbone: np.ndarray
    decoration_depth: np.ndarray
    decoration_roots: np.ndarray

    @property
    def vertex_count(self) -> int:
        return self.tree.vertex_count

    @property
    def branching(self) -> int:
        return self.tree.branching

    @property
    def max_backbone_neighbors(self) -> int:
        """K': largest number of off-backbone neighbors of a backbone site."""
        return 1


def build_decorated_backbone(K: int, depths: list[int]) -> BackboneGraph:
    """Glue a fresh regular (K, L_n) tree to every backbone site x_n.

    Args:
        K: Branching of the decorations
        depths: L_0..L_N, one per backbone site

    Returns:
        BackboneGraph with (N+1) + sum_n (K^{L_n+1} - 1)/(K - 1) vertices

    Raises:
        ParameterError: If depths is empty or contains a negative entry

    Example:
        >>> build_decorated_backbone(2, [2, 1]).vertex_count
        12
    """
    depths = [int(d) for d in depths]
    if not depths:
        raise ParameterError("Backbone needs at least one site")
    if any(d < 0 for d in depths):
        raise ParameterError(f"Decoration depths must be >= 0, got {depths}")

    sites = len(depths)
    parent_blocks = [np.concatenate(([-1], np.arange(sites - 1, dtype=np.int64)))]
    boundary_blocks = [np.zeros(sites, dtype=bool)]
    roots = []

    offset = sites
    for n, L_n in enumerate(depths):
        block = build_regular_tree(K, L_n)
        local_parent = block.parent.copy()
        local_parent[1:] += offset
        local_parent[0] = n
        parent_blocks.append(local_parent)
        boundary_blocks.append(block.is_boundary)
        roots.append(offset)
        offset += block.vertex_count

    tree = tree_from_parents(
        np.concatenate(parent_blocks),
        kind=TreeKind.DECORATED_BACKBONE,
        branching=K,
        is_boundary=np.concatenate(boundary_blocks),
    )
    return BackboneGraph(
        tree=tree,
        backbone=np.arange(sites, dtype=np.int64),
        decoration_depth=np.asarray(depths, dtype=np.int64),
        decoration_roots=np.asarray(roots, dtype=np.int64),
    )


def decoration_components(g: BackboneGraph) -> np.ndarray:
    """Sizes of the components left after deleting the backbone, by label."""
    tree = g.tree
    keep = np.ones(tree.vertex_count, dtype=bool)
    keep[g.backbone] = False

    edges = tree.edges()
    mask = keep[edges[:, 0]] & keep[edges[:, 1]]
    remaining = np.flatnonzero(keep)
    local = np.full(tree.vertex_count, -1, dtype=np.int64)
    local[remaining] = np.arange(remaining.shape[0])

    rows = local[edges[mask, 0]]
    cols = local[edges[mask, 1]]
    m = remaining.shape[0]
    adjacency = coo_matrix((np.ones(rows.shape[0]), (rows, cols)), shape=(m, m))
    _, labels = connected_components(adjacency, directed=False)
    return np.bincount(labels)


def expected_decoration_sizes(K: int, depths: list[int]) -> list[int]:
    return [regular_tree_size(K, d) for d in depths]
