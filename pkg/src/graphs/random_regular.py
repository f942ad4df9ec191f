"""Random c-regular graphs from the configuration model with rejection."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..config import RRG_MAX_ATTEMPTS
from ..errors import ParameterError, RetryLimitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Simple undirected graph stored as a sorted edge list plus CSR adjacency."""
    degree: int
    edge_list: np.ndarray
    neighbor_offsets: np.ndarray
    neighbor_index: np.ndarray
    connected: bool

    @property
    def vertex_count(self) -> int:
        return int(self.neighbor_offsets.shape[0] - 1)

    def neighbors(self, x: int) -> np.ndarray:
        return self.neighbor_index[self.neighbor_offsets[x]:self.neighbor_offsets[x + 1]]

    def edges(self) -> np.ndarray:
        return self.edge_list

    @property
    def is_boundary(self) -> np.ndarray:
        return np.zeros(self.vertex_count, dtype=bool)


def _pair_stubs(c: int, N: int, rng: np.random.Generator) -> np.ndarray | None:
    stubs = np.repeat(np.arange(N, dtype=np.int64), c)
    rng.shuffle(stubs)
    pairs = np.sort(stubs.reshape(-1, 2), axis=1)

    if np.any(pairs[:, 0] == pairs[:, 1]):
        return None
    keys = pairs[:, 0] * N + pairs[:, 1]
    if np.unique(keys).shape[0] != keys.shape[0]:
        return None

    order = np.lexsort((pairs[:, 1], pairs[:, 0]))
    return pairs[order]


def build_random_regular(c: int, N: int, seed: int,
                         max_attempts: int = RRG_MAX_ATTEMPTS) -> SimpleGraph:
    """Simple c-regular graph on N vertices.

    Stubs are paired uniformly at random; a pairing with a self-loop or a
    repeated edge is discarded as a whole and redrawn.

    Args:
        c: Degree, at least 3
        N: Vertex count, larger than c
        seed: Seed of the pairing generator

    Returns:
        SimpleGraph; connectivity is recorded, not enforced

    Raises:
        ParameterError: If c*N is odd, c < 3 or N <= c
        RetryLimitError: If no simple pairing was found within max_attempts

    Example:
        >>> build_random_regular(3, 4, seed=0).edges().shape
        (6, 2)
    """
    if c < 3:
        raise ParameterError(f"Degree must be >= 3, got {c}")
    if N <= c:
        raise ParameterError(f"Need more than {c} vertices, got {N}")
    if (c * N) % 2:
        raise ParameterError(f"Degree sum c*N = {c * N} is odd")

    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        edges = _pair_stubs(c, N, rng)
        if edges is not None:
            break
    else:
        raise RetryLimitError(f"No simple {c}-regular pairing on {N} vertices after {max_attempts} attempts")

    logger.debug("Configuration model accepted on attempt %d", attempt)

    both = np.concatenate((edges, edges[:, ::-1]))
    order = np.lexsort((both[:, 1], both[:, 0]))
    both = both[order]
    offsets = np.zeros(N + 1, dtype=np.int64)
    np.cumsum(np.bincount(both[:, 0], minlength=N), out=offsets[1:])

    adjacency = coo_matrix((np.ones(both.shape[0]), (both[:, 0], both[:, 1])), shape=(N, N))
    n_components, _ = connected_components(adjacency, directed=False)
    if n_components > 1:
        logger.warning("Random %d-regular graph on %d vertices has %d components", c, N, n_components)

    return SimpleGraph(
        degree=c,
        edge_list=edges,
        neighbor_offsets=offsets,
        neighbor_index=both[:, 1],
        connected=n_components == 1,
    )
