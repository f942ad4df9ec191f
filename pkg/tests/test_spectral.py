import numpy as np
import pytest

from src.errors import GraphSizeError, MissingEigenvectorsError, ParameterError
from src.graphs import build_regular_tree
from src.hamiltonian import operator_with_potential, to_dense
from src.spectral import (
    EigenSystem, canopy_chain_spectrum, canopy_decomposition_spectrum, diagonalize, diagonalize_ensemble,
    eigenvalue_frame, rescaled_process, spectral_measure, subtree_processes
)


def test_diagonalize_matches_numpy(uniform_ops):
    op = uniform_ops[0]
    eig = diagonalize(op, keep_vectors=True)
    assert np.allclose(eig.values, np.linalg.eigvalsh(to_dense(op)))
    assert np.allclose(eig.vectors.T @ eig.vectors, np.eye(op.vertex_count), atol=1e-10)
    assert np.all(np.diff(eig.values) >= 0)


def test_diagonalize_respects_dense_cap(uniform_ops):
    with pytest.raises(GraphSizeError):
        diagonalize(uniform_ops[0], dense_cap=8)


def test_rescaled_process_window():
    eig = EigenSystem(values=np.array([-1.0, 0.49, 0.5, 0.52, 2.0]))
    process = rescaled_process(eig, 0.5, 100, 3.0)
    assert np.allclose(process.points, [-1.0, 0.0, 2.0])
    assert process.count_in((-0.5, 2.5)) == 2
    with pytest.raises(ParameterError):
        rescaled_process(eig, 0.5, 100, 0.0)


def test_spectral_measure_is_a_probability(uniform_ops):
    op = uniform_ops[1]
    eig = diagonalize(op, keep_vectors=True)
    assert spectral_measure(eig, 0, (-10.0, 10.0)) == pytest.approx(1.0)
    assert spectral_measure(op, 5, (-10.0, 10.0)) == pytest.approx(1.0)
    assert spectral_measure(eig, 0, (0.0, 0.5)) <= 1.0
    with pytest.raises(MissingEigenvectorsError):
        spectral_measure(EigenSystem(values=eig.values), 0, (0.0, 1.0))


def test_subtree_processes(uniform_ops):
    op = uniform_ops[2]
    full = subtree_processes(op, 0, 0.5, np.inf)
    assert len(full) == 1
    assert full[0].points.shape[0] == op.vertex_count

    pieces = subtree_processes(op, 1, 0.5, np.inf)
    assert len(pieces) == 2
    assert all(p.volume == op.vertex_count for p in pieces)
    assert sum(p.points.shape[0] for p in pieces) == op.vertex_count - 1

    with pytest.raises(ParameterError):
        subtree_processes(op, 5, 0.5)


def test_chain_spectrum_examples():
    assert canopy_chain_spectrum(2, 0.7, 1).tolist() == [0.7]
    assert np.allclose(canopy_chain_spectrum(2, 0.0, 2), [-np.sqrt(2.0), np.sqrt(2.0)])
    with pytest.raises(ParameterError):
        canopy_chain_spectrum(2, 0.0, 0)


@pytest.mark.parametrize("K", [2, 3])
@pytest.mark.parametrize("L", [0, 1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("b", [0.0, 0.5, -1.0])
def test_chain_decomposition_matches_dense_spectrum(K, L, b):
    tree = build_regular_tree(K, L)
    op = operator_with_potential(tree, np.zeros(tree.vertex_count), b)
    dense = diagonalize(op).values
    chains = canopy_decomposition_spectrum(K, b, L)
    assert chains.shape == dense.shape
    assert np.max(np.abs(chains - dense)) < 1e-9


def test_eigenvalue_frame_layout(uniform_ops):
    systems = [EigenSystem(values=diagonalize(op).values, realization=r) for r, op in enumerate(uniform_ops[:2])]
    frame = eigenvalue_frame(systems)
    assert list(frame.columns) == ["realization", "n", "energy"]
    assert len(frame) == 2 * uniform_ops[0].vertex_count
    assert frame["realization"].tolist()[:2] == [0, 0]
    assert list(eigenvalue_frame([]).columns) == ["realization", "n", "energy"]


def test_diagonalize_ensemble_order_and_reproducibility(binary_tree, uniform_law):
    systems = diagonalize_ensemble(binary_tree, uniform_law, 0.0, seed=3, realizations=20)
    assert [eig.realization for eig in systems] == list(range(20))
    again = diagonalize_ensemble(binary_tree, uniform_law, 0.0, seed=3, realizations=20)
    assert all(np.array_equal(a.values, b.values) for a, b in zip(systems, again))
    with pytest.raises(GraphSizeError):
        diagonalize_ensemble(binary_tree, uniform_law, 0.0, seed=3, realizations=2, dense_cap=16)


@pytest.mark.slow
def test_diagonalize_ensemble_is_independent_of_workers(binary_tree, uniform_law):
    serial = diagonalize_ensemble(binary_tree, uniform_law, 0.0, seed=9, realizations=40, threads=1)
    pooled = diagonalize_ensemble(binary_tree, uniform_law, 0.0, seed=9, realizations=40, threads=2)
    assert all(np.array_equal(a.values, b.values) for a, b in zip(serial, pooled))
