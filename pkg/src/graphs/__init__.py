"""Graph families: regular, homogeneous and canopy trees, decorated backbones, random regular graphs."""

from .trees import (
    TreeGraph, TreeLayer, build_regular_tree, build_homogeneous_tree, build_canopy_truncation,
    path_between, root_path, distance, leftmost_ray, subtree, tree_from_parents
)
from .backbone import BackboneGraph, build_decorated_backbone, decoration_components
from .random_regular import SimpleGraph, build_random_regular
from .dump import format_graph, dump_graph

__all__ = [
    "TreeGraph",
    "TreeLayer",
    "build_regular_tree",
    "build_homogeneous_tree",
    "build_canopy_truncation",
    "path_between",
    "root_path",
    "distance",
    "leftmost_ray",
    "subtree",
    "tree_from_parents",
    "BackboneGraph",
    "build_decorated_backbone",
    "decoration_components",
    "SimpleGraph",
    "build_random_regular",
    "format_graph",
    "dump_graph"
]
