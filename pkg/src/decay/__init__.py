"""Decay-rate estimators: Lyapunov exponents, fractional moments, DKS length and Simon-Wolff diagnostics."""

from .fitting import DecayFit, fit_decay
from .lyapunov import (
    WidthQuantiles, LyapunovLowerBound, sample_root_green, lyapunov_finite, relative_width,
    law_relative_width, lyapunov_lower_bound, DEFAULT_ALPHA_GRID
)
from .fractional import (
    fractional_moment_decay, estimate_moment_sup, canopy_column_moments, backbone_lambda_lower
)
from .dks import (
    DksLambda, CorrelatorEstimate, dks_lambda, dks_candidate, admissible_intervals,
    correlator_sum, eigenfunction_correlator
)
from .simon_wolff import (
    DepthSchedule, square_summability_diagnostic, schedule_integral, sc_depth_schedule,
    interval_energy_scale
)

__all__ = [
    "DecayFit",
    "fit_decay",
    "WidthQuantiles",
    "LyapunovLowerBound",
    "sample_root_green",
    "lyapunov_finite",
    "relative_width",
    "law_relative_width",
    "lyapunov_lower_bound",
    "DEFAULT_ALPHA_GRID",
    "fractional_moment_decay",
    "estimate_moment_sup",
    "canopy_column_moments",
    "backbone_lambda_lower",
    "DksLambda",
    "CorrelatorEstimate",
    "dks_lambda",
    "dks_candidate",
    "admissible_intervals",
    "correlator_sum",
    "eigenfunction_correlator",
    "DepthSchedule",
    "square_summability_diagnostic",
    "schedule_integral",
    "sc_depth_schedule",
    "interval_energy_scale"
]
