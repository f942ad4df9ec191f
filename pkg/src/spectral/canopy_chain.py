"""Radial chain reduction of the adjacency operator with boundary term on regular trees."""

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from ..errors import ParameterError


def canopy_chain_spectrum(K: int, b: float, n: int) -> np.ndarray:
    """Eigenvalues of the n x n Jacobi matrix with diagonal (b, 0, ..., 0) and hopping sqrt(K).

    Example:
        >>> canopy_chain_spectrum(2, 0.7, 1)
        array([0.7])
    """
    if n < 1:
        raise ParameterError(f"Chain length must be >= 1, got {n}")
    if n == 1:
        return np.array([float(b)])
    d = np.zeros(n)
    d[0] = b
    e = np.full(n - 1, np.sqrt(K))
    return eigvalsh_tridiagonal(d, e)


def canopy_decomposition_spectrum(K: int, b: float, L: int) -> np.ndarray:
    """Spectrum of A + B on T_L assembled from chain spectra, sorted.

    One chain of length L+1 carries the radially symmetric states; every vertex
    at boundary distance m >= 1 contributes K-1 chains of length m, and there
    are K^{L-m} such vertices.
    """
    if L < 0:
        raise ParameterError(f"Depth must be >= 0, got {L}")
    parts = [canopy_chain_spectrum(K, b, L + 1)]
    for m in range(1, L + 1):
        copies = (K - 1) * K ** (L - m)
        parts.append(np.tile(canopy_chain_spectrum(K, b, m), copies))
    return np.sort(np.concatenate(parts))
