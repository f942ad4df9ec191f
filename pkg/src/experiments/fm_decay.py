"""Fractional-moment decay along a ray, scanned over the exponent s."""

import pandas as pd

from ..decay import fractional_moment_decay
from ..experiment_config import ExperimentConfig
from .base import ExperimentResult, threads_for


def run_fm_decay(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    exponents = sorted(set(config.s_list) | {config.s})

    result = ExperimentResult()
    frames, excess = [], {}
    for s in exponents:
        fit = fractional_moment_decay(law, config.K, config.b, config.L, config.E, config.eta, s,
                                      config.realizations, config.seed, threads_for(config))
        frames.append(pd.DataFrame({
            "s": s,
            "distance": fit.distances,
            "log_moment": fit.log_values,
            "stderr": fit.log_stderr,
        }))
        excess[str(s)] = {"rate": fit.rate, "rate_stderr": fit.rate_stderr,
                          "reference_rate": fit.reference_rate, "excess": fit.excess,
                          "significant": fit.significant_excess()}

    result.scalars["fits"] = excess
    result.checks["significant_excess_for_some_s"] = any(v["significant"] for v in excess.values())
    result.tables["decay"] = pd.concat(frames, ignore_index=True)
    return result
