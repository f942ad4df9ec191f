"""Backbone localization length from the single-site characteristic function, and eigenfunction correlators."""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from ..disorder import ConstantLaw, DisorderLaw
from ..ensemble import mc_mean
from ..errors import MissingEigenvectorsError, UnsupportedLawError
from ..graphs import BackboneGraph, distance
from ..spectral import EigenSystem
from .fitting import DecayFit, fit_decay

logger = logging.getLogger(__name__)

# Minimizer tolerance in eta
ETA_XTOL = 1e-10


def _admissibility(eta: float) -> float:
    """40 eta |log eta|; admissible etas keep this below one."""
    return 40.0 * eta * abs(math.log(eta))


def admissible_intervals() -> list[tuple[float, float]]:
    """Maximal eta intervals on which 40 eta |log eta| < 1."""
    def excess(eta):
        return _admissibility(eta) - 1.0

    peak = math.exp(-1.0)
    small = optimize.brentq(excess, 1e-12, peak)
    middle = optimize.brentq(excess, peak, 1.0 - 1e-15)
    large = optimize.brentq(excess, 1.0 + 1e-15, 2.0)
    return [(0.0, small), (middle, large)]


@dataclass(frozen=True)
class DksLambda:
    value: float
    eta_star: float


def dks_candidate(law: DisorderLaw, eta: float) -> float:
    """-2 / log(1 - alpha(eta)/25 (1 - 40 eta |log eta|)^2) with alpha(eta) = 1 - sup_{|xi| > eta} |rho_hat|."""
    if eta <= 0:
        return math.inf
    margin = 1.0 - _admissibility(eta)
    alpha = 1.0 - law.char_sup_beyond(eta)
    u = alpha / 25.0 * margin ** 2
    if margin <= 0 or u <= 0:
        return math.inf
    return -2.0 / math.log1p(-u)


def dks_lambda(law: DisorderLaw) -> DksLambda:
    """Infimum of the candidate over admissible eta, by bounded scalar minimization per interval.

    Raises:
        UnsupportedLawError: For a point-mass law

    Example:
        >>> from src.disorder import CauchyLaw
        >>> round(dks_lambda(CauchyLaw()).value, 2)
        78.09
    """
    if isinstance(law, ConstantLaw):
        raise UnsupportedLawError("DKS lambda is undefined for a point-mass law")

    best = DksLambda(value=math.inf, eta_star=math.nan)
    for lo, hi in admissible_intervals():
        result = optimize.minimize_scalar(
            lambda eta: dks_candidate(law, eta),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": ETA_XTOL},
        )
        if result.fun < best.value:
            best = DksLambda(value=float(result.fun), eta_star=float(result.x))

    logger.debug("DKS lambda %.6f at eta %.6g", best.value, best.eta_star)
    return best


@dataclass(frozen=True)
class CorrelatorEstimate:
    """Ensemble means of sum_{E_n in I} |psi_n(x)| |psi_n(y)| at increasing backbone distance."""
    distances: np.ndarray
    means: np.ndarray
    stderr: np.ndarray
    fit: DecayFit | None


def correlator_sum(eig: EigenSystem, x: int, y: int, interval: tuple[float, float]) -> float:
    if eig.vectors is None:
        raise MissingEigenvectorsError("Eigenfunction correlator needs eigenvectors")
    lo, hi = interval
    mask = (eig.values >= lo) & (eig.values <= hi)
    return float(np.sum(np.abs(eig.vectors[x, mask]) * np.abs(eig.vectors[y, mask])))


def eigenfunction_correlator(systems: list[EigenSystem], graph: BackboneGraph, x: int, ys: list[int],
                             interval: tuple[float, float], reference_rate: float = 0.0) -> CorrelatorEstimate:
    """MC means of the eigenfunction correlator from x to every y, with a log-linear decay fit.

    ``reference_rate`` is typically 1/lambda from dks_lambda.
    """
    distances = np.array([distance(graph.tree, x, y) for y in ys])
    values = np.array([[correlator_sum(eig, x, y, interval) for y in ys] for eig in systems])
    means, stderr = mc_mean(values)

    fit = None
    usable = means > 0
    if np.count_nonzero(usable) >= 2:
        fit = fit_decay(distances[usable], np.log(means[usable]), stderr[usable] / means[usable],
                        reference_rate=reference_rate)
    return CorrelatorEstimate(distances=distances, means=means, stderr=stderr, fit=fit)
