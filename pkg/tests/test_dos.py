import math

import numpy as np
import pytest

from src.config import DosMethod
from src.disorder import CauchyLaw, UniformLaw
from src.errors import InsufficientDataError, MissingEigenvectorsError, ParameterError
from src.graphs import build_canopy_truncation, build_homogeneous_tree, build_regular_tree
from src.hamiltonian import operator_with_potential
from src.dos import (
    bethe_average, canopy_dos_exact_cauchy, canopy_dos_mc, canopy_green_exact_cauchy, canopy_weights,
    finite_volume_dos, layer_dos, layer_weights, stieltjes_dos
)
from src.spectral import EigenSystem, diagonalize, diagonalize_ensemble


@pytest.fixture
def vector_systems(binary_tree, uniform_law):
    return diagonalize_ensemble(binary_tree, uniform_law, 0.3, seed=2, realizations=6, keep_vectors=True)


def test_layer_weights_are_exact_volume_fractions():
    weights = layer_weights(2, 5)
    assert weights.sum() == pytest.approx(1.0)
    assert weights[0] == pytest.approx(32 / 63)
    assert weights[-1] == pytest.approx(1 / 63)


@pytest.mark.parametrize("K, n_max", [(2, 0), (2, 5), (3, 12)])
def test_canopy_weights_sum_to_one(K, n_max):
    weights = canopy_weights(K, n_max)
    assert weights.sum() == pytest.approx(1.0)
    assert weights.shape == (n_max + 1,)
    if n_max > 0:
        assert weights[0] == pytest.approx((K - 1) / K)


def test_finite_volume_dos_counts_every_eigenvalue(vector_systems):
    assert finite_volume_dos(vector_systems, F=np.ones_like) == pytest.approx(1.0)
    edges = np.linspace(-5.0, 6.0, 45)
    estimate = finite_volume_dos(vector_systems, grid=edges)
    assert estimate.method is DosMethod.FINITE_VOLUME_HISTOGRAM
    assert np.sum(estimate.density * np.diff(edges)) == pytest.approx(1.0)
    assert estimate.energy_grid.shape == (44,)


def test_finite_volume_dos_errors(vector_systems):
    with pytest.raises(InsufficientDataError):
        finite_volume_dos([], F=np.ones_like)
    with pytest.raises(ParameterError):
        finite_volume_dos(vector_systems)


def test_layer_decomposition_reconstructs_trace(vector_systems, binary_tree):
    def F(e):
        return e ** 2 + np.cos(e)

    total = finite_volume_dos(vector_systems, F=F)
    weights = layer_weights(2, binary_tree.height)
    layered = sum(w * layer_dos(vector_systems, binary_tree, n, F) for n, w in enumerate(weights))
    assert layered == pytest.approx(total, rel=1e-10)
    assert layer_dos(vector_systems, binary_tree, 2, np.ones_like) == pytest.approx(1.0)


def test_layer_dos_errors(binary_tree, vector_systems):
    with pytest.raises(ParameterError):
        layer_dos(vector_systems, binary_tree, 9, np.ones_like)
    bare = [EigenSystem(values=vector_systems[0].values)]
    with pytest.raises(MissingEigenvectorsError):
        layer_dos(bare, binary_tree, 0, np.ones_like)


def test_stieltjes_dos_matches_eigenvalue_sum(uniform_ops):
    z = 0.2 + 0.1j
    mean, stderr = stieltjes_dos(uniform_ops, z)
    direct = np.mean([np.mean((1.0 / (diagonalize(op).values - z)).imag) for op in uniform_ops])
    assert mean == pytest.approx(direct, rel=1e-10)
    assert stderr > 0
    with pytest.raises(InsufficientDataError):
        stieltjes_dos([], z)


@pytest.mark.parametrize("K", [2, 3])
def test_bethe_average_of_vertex_counts_is_one(K):
    counts = [build_homogeneous_tree(K, L).vertex_count for L in range(1, 7)]
    value, sequence = bethe_average(counts, K)
    assert value == 1.0
    assert np.all(sequence == 1.0)
    with pytest.raises(InsufficientDataError):
        bethe_average(counts[:1], K)


@pytest.mark.parametrize("b", [0.0, 0.7])
def test_exact_cauchy_layers_match_dense_truncation(b):
    K, D, c, gamma = 2, 6, 0.3, 1.0
    z = 0.4 + 0.05j
    green = canopy_green_exact_cauchy(K, c, gamma, b, z, n_max=D, depth=D)

    tree = build_canopy_truncation(K, D, b)
    op = operator_with_potential(tree, np.full(tree.vertex_count, c), b)
    dense = np.linalg.inv(np.diag(op.diagonal) + _adjacency(tree) - (z + 1j * gamma) * np.eye(tree.vertex_count))
    for n in range(D + 1):
        x = tree.vertices_in_layer(n)[0]
        assert green[n] == pytest.approx(dense[x, x], abs=1e-12)


def _adjacency(tree):
    n = tree.vertex_count
    matrix = np.zeros((n, n))
    edges = tree.edges()
    matrix[edges[:, 0], edges[:, 1]] = 1.0
    matrix[edges[:, 1], edges[:, 0]] = 1.0
    return matrix


def test_infinite_canopy_is_the_limit_of_deep_truncations():
    z = np.array([0.0 + 0.01j, 1.5 + 0.01j])
    infinite = canopy_green_exact_cauchy(2, 0.0, 1.0, 0.0, z, n_max=4)
    deep = canopy_green_exact_cauchy(2, 0.0, 1.0, 0.0, z, n_max=4, depth=60)
    assert np.allclose(infinite, deep, atol=1e-10)
    assert infinite.shape == (5, 2)
    assert np.all(infinite.imag > 0)


def test_exact_cauchy_errors():
    with pytest.raises(ParameterError):
        canopy_green_exact_cauchy(2, 0.0, 0.0, 0.0, 1j)
    with pytest.raises(ParameterError):
        canopy_green_exact_cauchy(2, 0.0, 1.0, 0.0, 1j, n_max=5, depth=3)


def test_exact_cauchy_dos_estimate():
    grid = np.linspace(-3.0, 3.0, 7)
    estimate = canopy_dos_exact_cauchy(2, 0.0, 1.0, 0.0, grid, 1e-2)
    assert estimate.method is DosMethod.EXACT_CAUCHY
    assert np.all(estimate.density > 0)
    assert np.all(estimate.stderr == 0)
    assert estimate.tail_bound == pytest.approx(2.0 ** -12 / math.pi)
    assert np.allclose(estimate.density, estimate.density[::-1], rtol=1e-8)


@pytest.mark.slow
def test_monte_carlo_canopy_dos_matches_exact_cauchy():
    K, depth, n_max, eta = 2, 8, 6, 0.05
    grid = np.array([-1.0, 0.0, 0.8])
    law = CauchyLaw(0.0, 1.0)
    mc = canopy_dos_mc(K, law, 0.5, grid, eta, depth, n_max, realizations=400, seed=4)
    exact = canopy_dos_exact_cauchy(K, 0.0, 1.0, 0.5, grid, eta, depth=depth, n_max=n_max)
    assert mc.method is DosMethod.MC_CANOPY
    assert np.all(np.abs(mc.density - exact.density) <= 3.0 * mc.stderr)


def test_monte_carlo_canopy_dos_errors():
    law = UniformLaw(-1.0, 1.0)
    with pytest.raises(ParameterError):
        canopy_dos_mc(2, law, 0.0, [0.0], 0.0, 4, 2, realizations=2)
    with pytest.raises(ParameterError):
        canopy_dos_mc(2, law, 0.0, [0.0], 0.1, 4, 6, realizations=2)


def test_monte_carlo_canopy_dos_uniform_disorder():
    law = UniformLaw(-1.0, 1.0)
    estimate = canopy_dos_mc(2, law, 0.0, [0.0, 0.5], 0.1, 5, 3, realizations=20, seed=1)
    assert np.all(estimate.density > 0)
    assert estimate.tail_bound == pytest.approx(2.0 ** -3 * 0.5)


def test_regular_tree_stieltjes_dos_of_constant_potential():
    tree = build_regular_tree(2, 3)
    op = operator_with_potential(tree, np.zeros(tree.vertex_count))
    mean, stderr = stieltjes_dos([op], 0.5j)
    assert stderr == 0.0
    assert mean > 0
