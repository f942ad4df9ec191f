"""Layered Green-function sweeps on trees.

All kernels take ``shift = diagonal - z`` with shape (..., n). Leading axes are
independent problems (realizations, energies) and are processed together, one
depth layer at a time.
"""

import numpy as np

from ..config import SINGULAR_PIVOT
from ..errors import SingularEnergyError
from ..graphs import TreeGraph


def _invert(denominator: np.ndarray, vertices: np.ndarray) -> np.ndarray:
    small = np.abs(denominator) < SINGULAR_PIVOT
    if np.any(small):
        _, col = np.argwhere(small)[0]
        raise SingularEnergyError(vertex=int(vertices[col]))
    return 1.0 / denominator


def forward_sweep(g: TreeGraph, shift: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Forward gammas Gamma(x) = (shift(x) - sum_{children c} Gamma(c))^{-1}.

    Args:
        g: Tree
        shift: diagonal - z, shape (..., n), complex

    Returns:
        Tuple of (gamma, child_sum), both shaped like ``shift``

    Raises:
        SingularEnergyError: If a pivot vanishes
    """
    shift = np.asarray(shift, dtype=complex)
    shape = shift.shape
    flat = shift.reshape(-1, shape[-1])
    gamma = np.empty_like(flat)
    child_sum = np.zeros_like(flat)

    for layer in reversed(g.layers):
        idx = layer.vertices
        gamma[:, idx] = _invert(flat[:, idx] - child_sum[:, idx], idx)
        if layer.depth > 0:
            child_sum[:, layer.parents] = np.add.reduceat(gamma[:, idx], layer.starts, axis=1)

    return gamma.reshape(shape), child_sum.reshape(shape)


def downward_sweep(g: TreeGraph, shift: np.ndarray, gamma: np.ndarray,
                   child_sum: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full diagonal G(x,x) and the parent-side self-energy of every vertex.

    sigma(x) is the diagonal Green function at parent(x) of the graph with the
    forward subtree of x removed; sigma(root) = 0.
    """
    shift = np.asarray(shift, dtype=complex)
    shape = shift.shape
    n = shape[-1]
    flat_shift = shift.reshape(-1, n)
    flat_gamma = gamma.reshape(-1, n)
    flat_sum = child_sum.reshape(-1, n)

    sigma = np.zeros_like(flat_shift)
    inverse_green = np.empty_like(flat_shift)
    green = np.empty_like(flat_shift)

    for layer in g.layers:
        idx = layer.vertices
        if layer.depth > 0:
            parents = g.parent[idx]
            sigma[:, idx] = _invert(inverse_green[:, parents] + flat_gamma[:, idx], idx)
        inverse_green[:, idx] = flat_shift[:, idx] - flat_sum[:, idx] - sigma[:, idx]
        green[:, idx] = _invert(inverse_green[:, idx], idx)

    return green.reshape(shape), sigma.reshape(shape)


def path_diagonal(shift: np.ndarray, gamma: np.ndarray, child_sum: np.ndarray,
                  path: np.ndarray) -> np.ndarray:
    """G(x,x) for the vertices of a root-anchored path, without a full sweep.

    Args:
        path: Vertex indices starting at the root, each the parent of the next

    Returns:
        Array of shape (..., len(path))
    """
    shift = np.asarray(shift, dtype=complex)
    shape = shift.shape
    n = shape[-1]
    flat_shift = shift.reshape(-1, n)
    flat_gamma = gamma.reshape(-1, n)
    flat_sum = child_sum.reshape(-1, n)

    out = np.empty((flat_shift.shape[0], len(path)), dtype=complex)
    sigma = np.zeros(flat_shift.shape[0], dtype=complex)
    inverse_green = None
    for k, x in enumerate(path):
        where = np.array([x])
        if k > 0:
            sigma = _invert((inverse_green + flat_gamma[:, x])[:, None], where)[:, 0]
        inverse_green = flat_shift[:, x] - flat_sum[:, x] - sigma
        out[:, k] = _invert(inverse_green[:, None], where)[:, 0]

    return out.reshape(shape[:-1] + (len(path),))
