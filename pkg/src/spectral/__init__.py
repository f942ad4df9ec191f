"""Exact diagonalization, rescaled point processes and the canopy chain oracle."""

from .eigen import (
    EigenSystem, RescaledPointProcess, diagonalize, rescaled_process, spectral_measure,
    subtree_processes, eigenvalue_frame, diagonalize_ensemble
)
from .canopy_chain import canopy_chain_spectrum, canopy_decomposition_spectrum

__all__ = [
    "EigenSystem",
    "RescaledPointProcess",
    "diagonalize",
    "rescaled_process",
    "spectral_measure",
    "subtree_processes",
    "eigenvalue_frame",
    "diagonalize_ensemble",
    "canopy_chain_spectrum",
    "canopy_decomposition_spectrum"
]
