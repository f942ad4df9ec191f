import numpy as np
import pytest

from src.disorder import CauchyLaw, UniformLaw
from src.graphs import build_regular_tree
from src.hamiltonian import sample_operator, to_dense


def _dense_resolvent(op, z):
    n = op.vertex_count
    return np.linalg.inv(to_dense(op) - z * np.eye(n))


@pytest.fixture
def dense_resolvent():
    """(H - z)^{-1} by dense inversion, the oracle for every recursion."""
    return _dense_resolvent


@pytest.fixture
def uniform_law():
    return UniformLaw(0.0, 1.0)


@pytest.fixture
def cauchy_law():
    return CauchyLaw()


@pytest.fixture
def binary_tree():
    return build_regular_tree(2, 4)


@pytest.fixture
def uniform_ops(binary_tree, uniform_law):
    return [sample_operator(binary_tree, uniform_law, 0.0, seed=7, realization=r) for r in range(5)]


@pytest.fixture
def write_config(tmp_path):
    def _write(text, name="experiment.toml"):
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write
