import numpy as np
import pytest

from src.ensemble import chunk_indices, mc_mean, realization_rng, run_realizations


def _draws(indices):
    return [realization_rng(11, int(r)).standard_normal(3) for r in indices]


def test_realization_streams_depend_only_on_seed_and_index():
    a = realization_rng(4, 2).random(5)
    assert np.array_equal(a, realization_rng(4, 2).random(5))
    assert not np.array_equal(a, realization_rng(4, 3).random(5))
    assert not np.array_equal(a, realization_rng(5, 2).random(5))


def test_chunk_indices_cover_every_realization_once():
    chunks = chunk_indices(37, chunk_size=10)
    assert [len(c) for c in chunks] == [10, 10, 10, 7]
    assert np.concatenate(chunks).tolist() == list(range(37))
    assert chunk_indices(0) == []


def test_run_realizations_keeps_index_order():
    results = run_realizations(_draws, 25, threads=1, chunk_size=4)
    assert len(results) == 25
    assert all(np.array_equal(r, d) for r, d in zip(results, _draws(np.arange(25))))


def test_results_do_not_depend_on_chunking():
    small = run_realizations(_draws, 12, chunk_size=1)
    large = run_realizations(_draws, 12, chunk_size=12)
    assert all(np.array_equal(a, b) for a, b in zip(small, large))


@pytest.mark.slow
def test_pooled_run_matches_serial_run():
    serial = run_realizations(_draws, 40, threads=1, chunk_size=5)
    pooled = run_realizations(_draws, 40, threads=2, chunk_size=5)
    assert all(np.array_equal(a, b) for a, b in zip(serial, pooled))


def test_mc_mean():
    mean, stderr = mc_mean(np.array([1.0, 2.0, 3.0, 4.0]))
    assert mean == pytest.approx(2.5)
    assert stderr == pytest.approx(np.std([1, 2, 3, 4], ddof=1) / 2.0)

    mean, stderr = mc_mean(np.array([[1.0, 5.0]]))
    assert mean.tolist() == [1.0, 5.0]
    assert stderr.tolist() == [0.0, 0.0]
