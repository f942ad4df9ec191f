"""Decoration depth schedule for a backbone with singular continuous spectrum."""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..decay import (
    DepthSchedule, backbone_lambda_lower, estimate_moment_sup, interval_energy_scale, sc_depth_schedule
)
from ..experiment_config import ExperimentConfig
from .base import ExperimentResult, threads_for

logger = logging.getLogger(__name__)

# Energies per probe line of the C_s estimate
MOMENT_PROBE_POINTS = 9

# Off-backbone neighbors of a backbone site in a decorated path
K_PRIME = 1


@dataclass(frozen=True)
class ScPlan:
    moment_sup: float
    rate: float
    schedule: DepthSchedule


def plan_sc_backbone(config: ExperimentConfig) -> ScPlan:
    """Estimate C_{2 tau'}, then lambda(2 tau', E_I), then the depth schedule."""
    law = config.law()
    threads = threads_for(config)
    interval = (config.interval[0], config.interval[1])
    s = 2.0 * config.tau_prime

    probe_energies = np.linspace(interval[0], interval[1], MOMENT_PROBE_POINTS)
    moment_sup, _ = estimate_moment_sup(law, config.K, 0.0, s, probe_energies, config.L_list,
                                        config.eta, config.realizations, config.seed, threads)
    rate = backbone_lambda_lower(s, interval_energy_scale(interval), law, K_PRIME, moment_sup)
    logger.info("C_s = %.4f, lambda = %.4f", moment_sup, rate)

    schedule = sc_depth_schedule(law, config.K, interval, config.tau_prime, rate, config.backbone_length,
                                 config.L_cap, config.realizations, config.seed, threads)
    return ScPlan(moment_sup=moment_sup, rate=rate, schedule=schedule)


def run_sc_build(config: ExperimentConfig) -> ExperimentResult:
    plan = plan_sc_backbone(config)
    schedule = plan.schedule

    result = ExperimentResult()
    result.scalars.update({
        "moment_sup": plan.moment_sup,
        "lambda": plan.rate,
        "depths": schedule.depths.tolist(),
        "capped_sites": int(schedule.capped.sum()),
    })
    result.checks["schedule_non_decreasing"] = bool(np.all(np.diff(schedule.depths) >= 0))
    result.tables["sc_schedule"] = pd.DataFrame({
        "n": np.arange(schedule.depths.shape[0]),
        "depth": schedule.depths,
        "threshold": schedule.thresholds,
        "capped": schedule.capped,
    })
    result.tables["sc_integrals"] = pd.DataFrame({
        "L": np.arange(schedule.integrals.shape[0]),
        "integral": schedule.integrals,
    })
    return result
