"""Single-site disorder laws: densities, moments, characteristic functions and samplers."""

from .base import DisorderLaw
from .laws import CauchyLaw, UniformLaw, GaussianLaw, ConstantLaw
from .factory import law_from_spec

__all__ = [
    "DisorderLaw",
    "CauchyLaw",
    "UniformLaw",
    "GaussianLaw",
    "ConstantLaw",
    "law_from_spec"
]
