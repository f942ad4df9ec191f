"""Canopy Spectra

Simulation library and CLI for random Schrödinger operators on regular rooted
trees: recursive Green functions, the canopy density of states and the level
statistics of the volume-rescaled eigenvalue point process.
"""

__version__ = "0.1.0"
