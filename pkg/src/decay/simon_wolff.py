"""Square-summability diagnostic and decoration depth schedules for singular continuous spectrum."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..config import DEFAULT_ETA_LADDER
from ..disorder import DisorderLaw
from ..errors import ParameterError
from ..hamiltonian import OperatorSample
from ..resolvent import column_norm_sq
from .lyapunov import sample_root_green

logger = logging.getLogger(__name__)

# Regularization of the (H - E)^{-2} diagonal in the schedule integral
SCHEDULE_ETA = 1e-3

# Energies in the Simpson rule over I
SCHEDULE_QUAD_POINTS = 33


def square_summability_diagnostic(op: OperatorSample, x0: int, E: float,
                                  eta_ladder: tuple[float, ...] = DEFAULT_ETA_LADDER) -> np.ndarray:
    """<delta_x0, [(H - E)^2 + eta^2]^{-1} delta_x0>^{-1} for every eta of the ladder.

    Decrease toward zero as eta shrinks indicates a non-square-summable column.
    """
    return np.array([1.0 / column_norm_sq(op, x0, complex(E, eta)) for eta in eta_ladder])


@dataclass(frozen=True)
class DepthSchedule:
    """Decoration depths L_n and the integral estimates behind them.

    integrals[L] is the estimate of int_I E[<delta_0, [(H_{T_L} - E)^2 + eta^2]^{-1} delta_0>^{-tau'}] dE.
    """
    depths: np.ndarray
    thresholds: np.ndarray
    capped: np.ndarray
    integrals: np.ndarray


def schedule_integral(law: DisorderLaw, K: int, interval: tuple[float, float], tau_prime: float, L: int,
                      realizations: int, seed: int = 0, threads: int = 1,
                      eta: float = SCHEDULE_ETA, points: int = SCHEDULE_QUAD_POINTS) -> float:
    """MC means on an energy grid over I combined by Simpson's rule."""
    energies = np.linspace(interval[0], interval[1], points)
    green = sample_root_green(law, K, 0.0, L, energies + 1j * eta, realizations, seed, threads)
    inverse_norm = eta / green.imag
    integrand = np.mean(inverse_norm ** tau_prime, axis=0)
    return float(integrate.simpson(integrand, x=energies))


def sc_depth_schedule(law: DisorderLaw, K: int, interval: tuple[float, float], tau_prime: float,
                      lambda_target: float, n_max: int, L_cap: int, realizations: int,
                      seed: int = 0, threads: int = 1, eta: float = SCHEDULE_ETA) -> DepthSchedule:
    """Smallest depths L_n with integral <= exp(-2 lambda n), non-decreasing in n.

    Depths that never meet the threshold up to L_cap are set to L_cap and flagged.

    Raises:
        ParameterError: If tau_prime exceeds min(tau, 1/2)/2
    """
    limit = min(law.tau, 0.5) / 2.0
    if not 0 < tau_prime <= limit:
        raise ParameterError(f"tau_prime must lie in (0, {limit}], got {tau_prime}")

    integrals = np.array([
        schedule_integral(law, K, interval, tau_prime, L, realizations, seed, threads, eta)
        for L in range(L_cap + 1)
    ])
    thresholds = np.exp(-2.0 * lambda_target * np.arange(n_max + 1))

    depths = np.empty(n_max + 1, dtype=np.int64)
    capped = np.zeros(n_max + 1, dtype=bool)
    floor = 0
    for n, threshold in enumerate(thresholds):
        hits = np.flatnonzero(integrals[floor:] <= threshold)
        if hits.size:
            floor += int(hits[0])
        else:
            floor = L_cap
            capped[n] = True
        depths[n] = floor

    if capped.any():
        logger.warning("Depth schedule capped at L=%d for %d of %d sites",
                       L_cap, int(capped.sum()), n_max + 1)
    return DepthSchedule(depths=depths, thresholds=thresholds, capped=capped, integrals=integrals)


def interval_energy_scale(interval: tuple[float, float]) -> float:
    """E_I = sup_{E in I} |E|."""
    return float(max(abs(interval[0]), abs(interval[1])))
