"""Empirical Wegner and Minami checks on eigenvalue ensembles."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..disorder import DisorderLaw
from ..ensemble import mc_mean
from ..errors import UnsupportedLawError
from ..spectral import EigenSystem

logger = logging.getLogger(__name__)

MIN_BOUND_REALIZATIONS = 100

# Tolerance of the bound comparison, in MC standard errors
SIGMA_TOLERANCE = 3.0


@dataclass(frozen=True)
class WegnerMinamiReport:
    """Empirical first and second factorial moments of N_I against the analytic bounds.

    For laws without a bounded density the bounds are undefined and the report
    is flagged inapplicable; pass flags are then None.
    """
    interval: tuple[float, float]
    volume: int
    realizations: int
    applicable: bool
    mean_count: float
    mean_count_stderr: float
    mean_pairs: float
    mean_pairs_stderr: float
    wegner_bound: float
    minami_bound: float
    wegner_pass: bool | None
    minami_pass: bool | None

    @property
    def passed(self) -> bool:
        return self.applicable is False or bool(self.wegner_pass and self.minami_pass)


def wegner_bound(interval: tuple[float, float], volume: int, rho_sup: float) -> float:
    """|I| |T_L| ||rho||_inf"""
    return (interval[1] - interval[0]) * volume * rho_sup


def minami_bound(interval: tuple[float, float], volume: int, rho_sup: float) -> float:
    """pi^2 |I|^2 |T_L|^2 ||rho||_inf^2"""
    return math.pi ** 2 * ((interval[1] - interval[0]) * volume * rho_sup) ** 2


def wegner_minami_check(systems: list[EigenSystem], interval: tuple[float, float],
                        law: DisorderLaw, volume: int) -> WegnerMinamiReport:
    """Compare E[N_I] and E[N_I(N_I - 1)] with the Wegner and Minami bounds."""
    if len(systems) < MIN_BOUND_REALIZATIONS:
        logger.warning("Wegner/Minami check on %d realizations (recommended >= %d)",
                       len(systems), MIN_BOUND_REALIZATIONS)

    counts = np.array([eig.count_in(interval) for eig in systems], dtype=float)
    mean_count, count_err = mc_mean(counts)
    mean_pairs, pairs_err = mc_mean(counts * (counts - 1.0))

    try:
        rho_sup = law.density_sup()
    except UnsupportedLawError:
        logger.warning("Law %s has no bounded density; Wegner/Minami check inapplicable", law.describe())
        return WegnerMinamiReport(
            interval=tuple(interval), volume=int(volume), realizations=len(systems), applicable=False,
            mean_count=float(mean_count), mean_count_stderr=float(count_err),
            mean_pairs=float(mean_pairs), mean_pairs_stderr=float(pairs_err),
            wegner_bound=math.nan, minami_bound=math.nan, wegner_pass=None, minami_pass=None,
        )

    w_bound = wegner_bound(interval, volume, rho_sup)
    m_bound = minami_bound(interval, volume, rho_sup)
    return WegnerMinamiReport(
        interval=tuple(interval),
        volume=int(volume),
        realizations=len(systems),
        applicable=True,
        mean_count=float(mean_count),
        mean_count_stderr=float(count_err),
        mean_pairs=float(mean_pairs),
        mean_pairs_stderr=float(pairs_err),
        wegner_bound=w_bound,
        minami_bound=m_bound,
        wegner_pass=bool(mean_count <= w_bound + SIGMA_TOLERANCE * count_err),
        minami_pass=bool(mean_pairs <= m_bound + SIGMA_TOLERANCE * pairs_err),
    )
