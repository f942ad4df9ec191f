"""Line-oriented text dump of trees for debugging."""

from pathlib import Path

from .trees import TreeGraph


def format_graph(g: TreeGraph) -> str:
    """Header ``K L kind`` then ``index parent depth boundary_distance is_boundary`` per vertex."""
    lines = [f"{g.branching} {g.height} {g.kind.value}"]
    for v in range(g.vertex_count):
        lines.append(
            f"{v} {int(g.parent[v])} {int(g.depth[v])} "
            f"{int(g.boundary_distance[v])} {int(g.is_boundary[v])}"
        )
    return "\n".join(lines) + "\n"


def dump_graph(g: TreeGraph, filepath: Path) -> None:
    Path(filepath).write_text(format_graph(g))
