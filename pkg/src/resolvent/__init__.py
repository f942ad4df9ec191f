"""O(N) recursive Green functions on trees."""

from .green import (
    GammaTable, compute_gammas, green_root_to, green_pair, full_diagonal, column_norm_sq,
    batched_diagonal, batched_root_green, free_tree_gamma
)
from .kernels import forward_sweep, downward_sweep, path_diagonal

__all__ = [
    "GammaTable",
    "compute_gammas",
    "green_root_to",
    "green_pair",
    "full_diagonal",
    "column_norm_sq",
    "batched_diagonal",
    "batched_root_green",
    "free_tree_gamma",
    "forward_sweep",
    "downward_sweep",
    "path_diagonal"
]
