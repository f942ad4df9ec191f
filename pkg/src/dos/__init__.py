"""Density of states: finite volume, layer decomposition, canopy estimators and the Bethe average."""

from .finite_volume import (
    DosEstimate, finite_volume_dos, layer_dos, layer_weights, stieltjes_dos, bethe_average
)
from .canopy import (
    canopy_weights, canopy_layer_means, canopy_dos_mc, canopy_green_exact_cauchy,
    canopy_dos_exact_cauchy
)

__all__ = [
    "DosEstimate",
    "finite_volume_dos",
    "layer_dos",
    "layer_weights",
    "stieltjes_dos",
    "bethe_average",
    "canopy_weights",
    "canopy_layer_means",
    "canopy_dos_mc",
    "canopy_green_exact_cauchy",
    "canopy_dos_exact_cauchy"
]
