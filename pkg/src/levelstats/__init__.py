"""Point-process statistics of rescaled spectra."""

from .spacing import (
    SpacingSample, CountStatistics, spacing_statistics, ks_distance, count_distribution,
    exponential_cdf, wigner_surmise_cdf, wigner_surmise_pdf, REFERENCE_CDFS
)
from .bounds import WegnerMinamiReport, wegner_minami_check, wegner_bound, minami_bound
from .measures import (
    negligibility_curve, divisibility_gap, eigenfunction_mass_statistic, stieltjes_functional
)

__all__ = [
    "SpacingSample",
    "CountStatistics",
    "spacing_statistics",
    "ks_distance",
    "count_distribution",
    "exponential_cdf",
    "wigner_surmise_cdf",
    "wigner_surmise_pdf",
    "REFERENCE_CDFS",
    "WegnerMinamiReport",
    "wegner_minami_check",
    "wegner_bound",
    "minami_bound",
    "negligibility_curve",
    "divisibility_gap",
    "eigenfunction_mass_statistic",
    "stieltjes_functional"
]
