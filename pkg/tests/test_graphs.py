import numpy as np
import pytest

from src.config import TreeKind
from src.errors import ParameterError
from src.graphs import (
    build_canopy_truncation, build_decorated_backbone, build_homogeneous_tree, build_random_regular,
    build_regular_tree, decoration_components, distance, dump_graph, format_graph, leftmost_ray,
    path_between, root_path, subtree, tree_from_parents
)
from src.graphs.backbone import expected_decoration_sizes


@pytest.mark.parametrize("K, L, size", [(2, 0, 1), (2, 3, 15), (3, 2, 13), (4, 1, 5)])
def test_regular_tree_size(K, L, size):
    assert build_regular_tree(K, L).vertex_count == size


def test_regular_tree_numbering_and_boundary():
    tree = build_regular_tree(2, 3)
    assert tree.children(0).tolist() == [1, 2]
    assert tree.children(3).tolist() == [7, 8]
    assert tree.parent[8] == 3
    assert int(tree.is_boundary.sum()) == 8
    assert tree.vertices_in_layer(0).tolist() == list(range(7, 15))
    assert tree.vertices_in_layer(3).tolist() == [0]
    assert tree.edge_count == 14


@pytest.mark.parametrize("K, L", [(1, 2), (2, -1)])
def test_regular_tree_rejects_bad_parameters(K, L):
    with pytest.raises(ParameterError):
        build_regular_tree(K, L)


def test_homogeneous_tree_root_has_extra_child():
    tree = build_homogeneous_tree(2, 2)
    assert tree.vertex_count == 10
    assert tree.kind is TreeKind.HOMOGENEOUS
    assert len(tree.children(0)) == 3
    for v in tree.vertices_at_depth(1):
        assert len(tree.children(int(v))) == 2
    assert int(tree.is_boundary.sum()) == 6


def test_canopy_truncation_labels_layers_from_boundary():
    tree = build_canopy_truncation(2, 4, b=0.5)
    assert tree.kind is TreeKind.CANOPY_TRUNCATION
    assert tree.boundary_value == 0.5
    assert tree.vertices_in_layer(0).shape[0] == 16
    assert tree.vertices_in_layer(4).tolist() == [0]


def test_paths_and_distances():
    tree = build_regular_tree(2, 2)
    assert path_between(build_regular_tree(2, 1), 1, 2) == [1, 0, 2]
    assert distance(tree, 3, 6) == 4
    assert distance(tree, 3, 4) == 2
    assert distance(tree, 5, 5) == 0
    assert root_path(tree, 6).tolist() == [0, 2, 6]


def test_leftmost_ray_follows_first_child():
    assert leftmost_ray(build_regular_tree(2, 3)).tolist() == [0, 1, 3, 7]


def test_subtree_keeps_boundary_flags():
    tree = build_regular_tree(2, 3)
    sub, vertex_map = subtree(tree, 1)
    assert sub.vertex_count == 7
    assert vertex_map[0] == 1
    assert int(sub.is_boundary.sum()) == 4
    assert np.all(tree.is_boundary[vertex_map] == sub.is_boundary)


def test_tree_from_parents():
    tree = tree_from_parents(np.array([-1, 0, 0, 1]), kind=TreeKind.REGULAR, branching=2)
    assert tree.height == 2
    assert tree.is_boundary.tolist() == [False, False, True, True]
    with pytest.raises(ParameterError):
        tree_from_parents(np.array([-1, 2, 0]), kind=TreeKind.REGULAR, branching=2)


def test_decorated_backbone_structure():
    g = build_decorated_backbone(2, [2, 1])
    assert g.vertex_count == 12
    assert g.backbone.tolist() == [0, 1]
    assert g.decoration_depth.tolist() == [2, 1]
    assert sorted(decoration_components(g).tolist()) == sorted(expected_decoration_sizes(2, [2, 1]))
    assert g.tree.parent[g.decoration_roots[1]] == 1
    assert g.max_backbone_neighbors == 1


@pytest.mark.parametrize("depths", [[], [1, -1]])
def test_decorated_backbone_rejects_bad_depths(depths):
    with pytest.raises(ParameterError):
        build_decorated_backbone(2, depths)


def test_random_regular_is_simple_and_regular():
    g = build_random_regular(3, 20, seed=1)
    edges = g.edges()
    assert edges.shape == (30, 2)
    assert np.all(np.bincount(edges.ravel(), minlength=20) == 3)
    assert np.all(edges[:, 0] != edges[:, 1])
    assert np.unique(edges, axis=0).shape[0] == 30
    assert sorted(g.neighbors(0).tolist()) == g.neighbors(0).tolist()


def test_random_regular_is_reproducible():
    a = build_random_regular(3, 50, seed=4)
    b = build_random_regular(3, 50, seed=4)
    assert np.array_equal(a.edges(), b.edges())


@pytest.mark.parametrize("c, N", [(3, 5), (2, 10), (3, 3)])
def test_random_regular_rejects_bad_parameters(c, N):
    with pytest.raises(ParameterError):
        build_random_regular(c, N, seed=0)


def test_graph_dump(tmp_path):
    tree = build_regular_tree(2, 1)
    text = format_graph(tree)
    lines = text.splitlines()
    assert lines[0] == "2 1 regular"
    assert lines[2] == "1 0 1 0 1"
    assert len(lines) == 4

    path = tmp_path / "graph.txt"
    dump_graph(tree, path)
    assert path.read_text() == text
