"""Negligibility in probability of the rescaled root spectral measure."""

import numpy as np
from scipy import stats

from ..experiment_config import ExperimentConfig
from ..levelstats import negligibility_curve
from .base import ExperimentResult, threads_for


def run_negligibility(config: ExperimentConfig) -> ExperimentResult:
    curve = negligibility_curve(
        config.law(), config.K, config.b, config.E, config.w, config.epsilon, config.L_list,
        config.realizations, seed=config.seed, threads=threads_for(config), dense_cap=config.dense_cap,
    )
    probabilities = curve["probability"].to_numpy()

    result = ExperimentResult()
    if len(probabilities) >= 2 and np.ptp(probabilities) > 0:
        rho = float(stats.spearmanr(curve["L"], probabilities).statistic)
    else:
        rho = 0.0
    result.scalars.update({
        "spearman": rho,
        "final_probability": float(probabilities[-1]),
    })
    result.checks.update({
        "negative_rank_correlation": rho < 0 or bool(np.all(probabilities == 0)),
        "strictly_decreasing": bool(np.all(np.diff(probabilities) < 0)) or bool(np.all(probabilities == 0)),
    })
    result.tables["negligibility"] = curve
    return result
