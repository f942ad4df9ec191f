"""Green functions of tree operators from forward gammas and parent-side self-energies."""

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError, SingularEnergyError
from ..graphs import TreeGraph, path_between, root_path
from ..hamiltonian import OperatorSample
from .kernels import downward_sweep, forward_sweep, path_diagonal


@dataclass(frozen=True, eq=False)
class GammaTable:
    """Forward gammas of one operator at one energy.

    gamma[x] is the diagonal resolvent entry at x of H restricted to the forward
    subtree of x; child_sum[x] is the sum of gamma over the children of x.
    """
    op: OperatorSample
    z: complex
    gamma: np.ndarray
    child_sum: np.ndarray


def _with_energy(error: SingularEnergyError, z: complex) -> SingularEnergyError:
    return SingularEnergyError(vertex=error.vertex, energy=z)


def compute_gammas(op: OperatorSample, z: complex) -> GammaTable:
    """One bottom-up pass over the tree of ``op``.

    Args:
        op: Operator on a tree or decorated backbone
        z: Spectral parameter; real values are allowed but may hit a singular pivot

    Returns:
        GammaTable at z

    Raises:
        SingularEnergyError: If a denominator vanishes at real z

    Example:
        >>> from src.graphs import build_regular_tree
        >>> from src.hamiltonian import operator_with_potential
        >>> op = operator_with_potential(build_regular_tree(2, 0), [2.0])
        >>> bool(np.isclose(compute_gammas(op, 1j).gamma[0], 1 / (2 - 1j)))
        True
    """
    z = complex(z)
    try:
        gamma, child_sum = forward_sweep(op.tree, op.diagonal - z)
    except SingularEnergyError as error:
        raise _with_energy(error, z) from None
    return GammaTable(op=op, z=z, gamma=gamma, child_sum=child_sum)


def green_root_to(op: OperatorSample, table: GammaTable, x: int) -> complex:
    """G(root, x) as the signed product of gammas along the root-to-x path."""
    if table.op is not op:
        raise ParameterError("GammaTable was computed for a different operator")
    path = root_path(op.tree, x)
    sign = -1.0 if (len(path) - 1) % 2 else 1.0
    return complex(sign * np.prod(table.gamma[path]))


def _sweep(op: OperatorSample, z: complex) -> tuple[GammaTable, np.ndarray, np.ndarray]:
    table = compute_gammas(op, z)
    try:
        green, sigma = downward_sweep(op.tree, op.diagonal - table.z, table.gamma, table.child_sum)
    except SingularEnergyError as error:
        raise _with_energy(error, table.z) from None
    return table, green, sigma


def green_pair(op: OperatorSample, x: int, y: int, z: complex) -> complex:
    """Off-diagonal entry G(x, y; z).

    Starting from G(x, x), every step of the x-to-y path multiplies by minus the
    diagonal Green function of the piece entered: sigma of the vertex left on an
    upward step, gamma of the child entered on a downward step.
    """
    tree = op.tree
    path = path_between(tree, x, y)
    table, green, sigma = _sweep(op, z)

    value = green[path[0]]
    for prev, cur in zip(path[:-1], path[1:]):
        if tree.parent[prev] == cur:
            value *= -sigma[prev]
        else:
            value *= -table.gamma[cur]
    return complex(value)


def full_diagonal(op: OperatorSample, z: complex) -> np.ndarray:
    """G(x, x; z) for every vertex in O(N).

    Example:
        >>> from src.graphs import build_regular_tree
        >>> from src.hamiltonian import operator_with_potential
        >>> op = operator_with_potential(build_regular_tree(2, 0), [0.5])
        >>> bool(np.isclose(full_diagonal(op, 1j)[0], 1 / (0.5 - 1j)))
        True
    """
    _, green, _ = _sweep(op, z)
    return green


def batched_diagonal(tree: TreeGraph, diagonals: np.ndarray, z: complex | np.ndarray) -> np.ndarray:
    """Full resolvent diagonals for a stack of potentials on one tree.

    Args:
        tree: Common tree
        diagonals: Real array of shape (R, n), one operator diagonal per row
        z: Scalar energy or array broadcastable against (R, n)

    Returns:
        Complex array of shape (R, n)
    """
    shift = np.asarray(diagonals, dtype=complex) - np.asarray(z, dtype=complex)
    gamma, child_sum = forward_sweep(tree, shift)
    green, _ = downward_sweep(tree, shift, gamma, child_sum)
    return green


def batched_root_green(tree: TreeGraph, diagonals: np.ndarray, z: complex | np.ndarray) -> np.ndarray:
    """G(root, root; z) for a stack of potentials, forward pass only."""
    shift = np.asarray(diagonals, dtype=complex) - np.asarray(z, dtype=complex)
    gamma, _ = forward_sweep(tree, shift)
    return gamma[..., tree.root]


def column_norm_sq(op: OperatorSample, x: int, z: complex) -> float:
    """||(H - z)^{-1} delta_x||^2 = Im G(x, x; z) / Im z.

    Raises:
        ParameterError: If Im z <= 0
    """
    z = complex(z)
    if z.imag <= 0:
        raise ParameterError(f"Column norm needs Im z > 0, got {z}")
    table = compute_gammas(op, z)
    path = root_path(op.tree, x)
    try:
        diag = path_diagonal(op.diagonal - z, table.gamma, table.child_sum, path)[-1]
    except SingularEnergyError as error:
        raise _with_energy(error, z) from None
    return float(diag.imag / z.imag)


def free_tree_gamma(K: int, z: complex | np.ndarray) -> complex | np.ndarray:
    """Forward gamma of the infinite disorder-free K-ary tree.

    The Herglotz root of K g^2 + z g + 1 = 0; |g| = K^{-1/2} for real parts
    of z inside (-2 sqrt(K), 2 sqrt(K)) as Im z -> 0.

    Raises:
        ParameterError: If Im z <= 0

    Example:
        >>> round(abs(free_tree_gamma(2, 1e-4j)), 4)
        0.7071
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0):
        raise ParameterError("Free-tree gamma needs Im z > 0")
    root = np.sqrt(z * z - 4.0 * K)
    plus, minus = (-z + root) / (2.0 * K), (-z - root) / (2.0 * K)
    value = np.where(plus.imag > 0, plus, minus)
    return complex(value) if value.ndim == 0 else value
