"""Reproducible disorder ensembles and the realization worker pool."""

import logging
from multiprocessing import Pool
from typing import Callable, Sequence, TypeVar

import numpy as np

from .config import DEFAULT_CHUNK_SIZE

logger = logging.getLogger(__name__)

T = TypeVar("T")


def realization_rng(seed: int, realization: int) -> np.random.Generator:
    """Generator for realization r of the ensemble with master seed ``seed``.

    The stream depends only on (seed, realization), never on which worker or
    chunk draws it.
    """
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(realization),)))


def chunk_indices(realizations: int, chunk_size: int = DEFAULT_CHUNK_SIZE) -> list[np.ndarray]:
    indices = np.arange(int(realizations))
    return [indices[i:i + chunk_size] for i in range(0, indices.shape[0], chunk_size)]


def run_realizations(
    worker: Callable[[np.ndarray], Sequence[T]],
    realizations: int,
    threads: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> list[T]:
    """Map ``worker`` over ordered chunks of realization indices.

    Args:
        worker: Picklable callable taking an index array and returning one result per index
        realizations: Ensemble size
        threads: Worker processes; 1 runs in-process
        chunk_size: Indices per worker call

    Returns:
        Per-realization results in index order
    """
    chunks = chunk_indices(realizations, chunk_size)
    logger.info("Running %d realizations in %d chunks on %d worker(s)", realizations, len(chunks), threads)

    if threads <= 1 or len(chunks) <= 1:
        parts = [worker(chunk) for chunk in chunks]
    else:
        with Pool(processes=threads) as pool:
            parts = pool.map(worker, chunks)

    return [item for part in parts for item in part]


def mc_mean(values: np.ndarray, axis: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Sample mean and its standard error along ``axis``."""
    values = np.asarray(values, dtype=float)
    n = values.shape[axis]
    mean = values.mean(axis=axis)
    if n < 2:
        return mean, np.zeros_like(mean)
    return mean, values.std(axis=axis, ddof=1) / np.sqrt(n)
