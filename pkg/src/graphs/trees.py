"""Rooted tree families: regular trees, homogeneous trees and canopy truncations."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..config import MAX_VERTICES, TreeKind, regular_tree_size
from ..errors import GraphSizeError, ParameterError


@dataclass(frozen=True)
class TreeLayer:
    """Vertices at one depth, grouped by parent.

    ``vertices`` is sorted by parent; ``parents`` lists each distinct parent once
    and ``starts`` gives the offset of its first child inside ``vertices``.
    """
    depth: int
    vertices: np.ndarray
    parents: np.ndarray
    starts: np.ndarray


@dataclass(frozen=True, eq=False)
class TreeGraph:
    """Immutable rooted tree.

    Vertex 0 is the root and every parent index is smaller than its children's,
    so a reverse scan visits children before parents.
    """
    kind: TreeKind
    branching: int
    height: int
    parent: np.ndarray
    depth: np.ndarray
    boundary_distance: np.ndarray
    is_boundary: np.ndarray
    child_offsets: np.ndarray
    child_index: np.ndarray
    boundary_value: float | None = None

    @property
    def vertex_count(self) -> int:
        return int(self.parent.shape[0])

    @property
    def root(self) -> int:
        return 0

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    def children(self, x: int) -> np.ndarray:
        self.check_vertex(x)
        return self.child_index[self.child_offsets[x]:self.child_offsets[x + 1]]

    def neighbors(self, x: int) -> np.ndarray:
        kids = self.children(x)
        if self.parent[x] < 0:
            return kids
        return np.concatenate(([self.parent[x]], kids))

    def check_vertex(self, x: int) -> None:
        if not 0 <= int(x) < self.vertex_count:
            raise IndexError(f"Vertex {x} outside 0..{self.vertex_count - 1}")

    def edges(self) -> np.ndarray:
        """(parent, child) pairs, one row per edge."""
        kids = np.arange(1, self.vertex_count)
        return np.column_stack((self.parent[1:], kids))

    @property
    def layer(self) -> np.ndarray:
        """Canopy layer labels (distance to the outer boundary)."""
        return self.boundary_distance

    def vertices_at_depth(self, d: int) -> np.ndarray:
        return np.flatnonzero(self.depth == d)

    def vertices_in_layer(self, n: int) -> np.ndarray:
        return np.flatnonzero(self.boundary_distance == n)

    @cached_property
    def layers(self) -> tuple[TreeLayer, ...]:
        """Depth layers from the root down, used by the resolvent sweeps."""
        order = np.lexsort((np.arange(self.vertex_count), self.parent, self.depth))
        depths = self.depth[order]
        cuts = np.flatnonzero(np.diff(depths)) + 1
        result = []
        for block in np.split(order, cuts):
            parents_of_block = self.parent[block]
            parents, starts = np.unique(parents_of_block, return_index=True)
            result.append(TreeLayer(
                depth=int(self.depth[block[0]]),
                vertices=block,
                parents=parents,
                starts=starts,
            ))
        return tuple(result)


def _check_size(vertex_count: int) -> None:
    if vertex_count > MAX_VERTICES:
        raise GraphSizeError(f"Tree with {vertex_count} vertices exceeds limit {MAX_VERTICES}")


def _children_csr(parent: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = parent.shape[0]
    kids = np.arange(1, n)
    order = np.argsort(parent[1:], kind="stable")
    child_index = kids[order]
    counts = np.bincount(parent[1:], minlength=n) if n > 1 else np.zeros(n, dtype=np.int64)
    child_offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=child_offsets[1:])
    return child_offsets, child_index


def tree_from_parents(
    parent: np.ndarray,
    kind: TreeKind,
    branching: int,
    is_boundary: np.ndarray | None = None,
    boundary_value: float | None = None,
) -> TreeGraph:
    """Build a TreeGraph from a parent array with parent[v] < v and parent[0] = -1.

    boundary_distance is the height of each vertex's forward subtree; leaves are
    flagged as boundary unless an explicit mask is given.
    """
    parent = np.asarray(parent, dtype=np.int64)
    n = parent.shape[0]
    if n == 0 or parent[0] != -1:
        raise ParameterError("Parent array must start with the root sentinel -1")
    if n > 1 and np.any(parent[1:] >= np.arange(1, n)):
        raise ParameterError("Parent indices must precede their children")
    if n > 1 and np.any(parent[1:] < 0):
        raise ParameterError("Only the root may lack a parent")
    _check_size(n)

    depth = np.zeros(n, dtype=np.int64)
    for v in range(1, n):
        depth[v] = depth[parent[v]] + 1

    height = np.zeros(n, dtype=np.int64)
    for v in range(n - 1, 0, -1):
        p = parent[v]
        if height[v] + 1 > height[p]:
            height[p] = height[v] + 1

    child_offsets, child_index = _children_csr(parent)
    if is_boundary is None:
        is_boundary = np.diff(child_offsets) == 0

    return TreeGraph(
        kind=kind,
        branching=branching,
        height=int(height[0]),
        parent=parent,
        depth=depth,
        boundary_distance=height,
        is_boundary=np.asarray(is_boundary, dtype=bool),
        child_offsets=child_offsets,
        child_index=child_index,
        boundary_value=boundary_value,
    )


def build_regular_tree(K: int, L: int, kind: TreeKind = TreeKind.REGULAR,
                       boundary_value: float | None = None) -> TreeGraph:
    """Finite regular rooted tree T_L with branching K.

    Vertices are numbered breadth-first; the children of v are K*v+1 .. K*v+K.

    Args:
        K: Forward branching number, at least 2
        L: Depth, at least 0

    Returns:
        TreeGraph with (K^{L+1} - 1)/(K - 1) vertices

    Raises:
        ParameterError: If K < 2 or L < 0
        GraphSizeError: If the vertex count exceeds MAX_VERTICES

    Example:
        >>> build_regular_tree(2, 3).vertex_count
        15
    """
    if K < 2:
        raise ParameterError(f"Branching number must be >= 2, got {K}")
    if L < 0:
        raise ParameterError(f"Depth must be >= 0, got {L}")

    n = regular_tree_size(K, L)
    _check_size(n)

    vertices = np.arange(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    parent[0] = -1
    parent[1:] = (vertices[1:] - 1) // K

    layer_sizes = K ** np.arange(L + 1, dtype=np.int64)
    depth = np.repeat(np.arange(L + 1, dtype=np.int64), layer_sizes)

    internal = regular_tree_size(K, L - 1) if L > 0 else 0
    child_offsets = np.minimum(np.arange(n + 1, dtype=np.int64), internal) * K
    child_index = vertices[1:]

    return TreeGraph(
        kind=kind,
        branching=K,
        height=L,
        parent=parent,
        depth=depth,
        boundary_distance=L - depth,
        is_boundary=depth == L,
        child_offsets=child_offsets,
        child_index=child_index,
        boundary_value=boundary_value,
    )


def build_homogeneous_tree(K: int, L: int) -> TreeGraph:
    """Ball of radius L in the homogeneous tree: the root has K+1 children.

    Example:
        >>> build_homogeneous_tree(2, 2).vertex_count
        10
    """
    if K < 2:
        raise ParameterError(f"Branching number must be >= 2, got {K}")
    if L < 0:
        raise ParameterError(f"Depth must be >= 0, got {L}")

    n = 1 if L == 0 else 1 + (K + 1) * (K ** L - 1) // (K - 1)
    _check_size(n)

    vertices = np.arange(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    parent[0] = -1
    parent[1:min(n, K + 2)] = 0
    if n > K + 2:
        parent[K + 2:] = (vertices[K + 2:] - 2) // K

    if L == 0:
        depth = np.zeros(1, dtype=np.int64)
    else:
        sizes = (K + 1) * K ** np.arange(L, dtype=np.int64)
        depth = np.concatenate(([0], np.repeat(np.arange(1, L + 1, dtype=np.int64), sizes)))

    child_offsets, child_index = _children_csr(parent)
    return TreeGraph(
        kind=TreeKind.HOMOGENEOUS,
        branching=K,
        height=L,
        parent=parent,
        depth=depth,
        boundary_distance=L - depth,
        is_boundary=depth == L,
        child_offsets=child_offsets,
        child_index=child_index,
    )


def build_canopy_truncation(K: int, D: int, b: float = 0.0) -> TreeGraph:
    """Depth-D truncation of the canopy graph.

    Structurally T_D; layer labels run from 0 on the canopy boundary up to D at
    the free top vertex. The boundary constant b is recorded on the graph.
    """
    return build_regular_tree(K, D, kind=TreeKind.CANOPY_TRUNCATION, boundary_value=float(b))


def path_between(g: TreeGraph, x: int, y: int) -> list[int]:
    """Unique simple path from x to y through their lowest common ancestor.

    Example:
        >>> path_between(build_regular_tree(2, 1), 1, 2)
        [1, 0, 2]
    """
    g.check_vertex(x)
    g.check_vertex(y)
    x, y = int(x), int(y)

    up, down = [x], [y]
    while g.depth[up[-1]] > g.depth[down[-1]]:
        up.append(int(g.parent[up[-1]]))
    while g.depth[down[-1]] > g.depth[up[-1]]:
        down.append(int(g.parent[down[-1]]))
    while up[-1] != down[-1]:
        up.append(int(g.parent[up[-1]]))
        down.append(int(g.parent[down[-1]]))

    return up + down[-2::-1]


def root_path(g: TreeGraph, x: int) -> np.ndarray:
    """Vertices from the root down to x."""
    return np.asarray(path_between(g, g.root, x), dtype=np.int64)


def distance(g: TreeGraph, x: int, y: int) -> int:
    return len(path_between(g, x, y)) - 1


def leftmost_ray(g: TreeGraph) -> np.ndarray:
    """Root-to-boundary ray following the first child at every step."""
    ray = [g.root]
    while g.child_offsets[ray[-1] + 1] > g.child_offsets[ray[-1]]:
        ray.append(int(g.child_index[g.child_offsets[ray[-1]]]))
    return np.asarray(ray, dtype=np.int64)


def subtree(g: TreeGraph, x: int) -> tuple[TreeGraph, np.ndarray]:
    """Forward subtree of x as its own tree.

    Returns:
        Tuple of (subtree, vertex_map) where vertex_map[i] is the index in g of
        subtree vertex i; boundary flags are inherited from g.
    """
    g.check_vertex(x)
    members = [int(x)]
    head = 0
    while head < len(members):
        v = members[head]
        members.extend(int(c) for c in g.children(v))
        head += 1
    vertex_map = np.asarray(members, dtype=np.int64)

    local = np.full(g.vertex_count, -1, dtype=np.int64)
    local[vertex_map] = np.arange(vertex_map.shape[0])
    parent = local[g.parent[vertex_map[1:]]]
    parent = np.concatenate(([-1], parent))

    return tree_from_parents(
        parent,
        kind=g.kind,
        branching=g.branching,
        is_boundary=g.is_boundary[vertex_map],
        boundary_value=g.boundary_value,
    ), vertex_map
