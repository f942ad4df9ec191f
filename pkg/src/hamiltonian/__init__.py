"""Random Hamiltonian assembly and matrix views."""

from .operator import (
    Graph, OperatorSample, sample_operator, operator_with_potential, default_boundary_mask,
    tree_of, to_dense, to_sparse, apply, format_matrix, dump_matrix
)

__all__ = [
    "Graph",
    "OperatorSample",
    "sample_operator",
    "operator_with_potential",
    "default_boundary_mask",
    "tree_of",
    "to_dense",
    "to_sparse",
    "apply",
    "format_matrix",
    "dump_matrix"
]
