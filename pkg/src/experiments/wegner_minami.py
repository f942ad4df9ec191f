"""Empirical Wegner and Minami estimates on T_L."""

import math

import pandas as pd

from ..experiment_config import ExperimentConfig
from ..graphs import build_regular_tree
from ..levelstats import wegner_minami_check
from ..spectral import diagonalize_ensemble
from .base import ExperimentResult, threads_for


def run_wegner_minami(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    tree = build_regular_tree(config.K, config.L)
    interval = (config.interval[0], config.interval[1])

    systems = diagonalize_ensemble(tree, law, config.b, config.seed, config.realizations,
                                   threads=threads_for(config), dense_cap=config.dense_cap)
    report = wegner_minami_check(systems, interval, law, tree.vertex_count)

    result = ExperimentResult()
    result.scalars.update({
        "volume": report.volume,
        "applicable": report.applicable,
        "mean_count": report.mean_count,
        "mean_count_stderr": report.mean_count_stderr,
        "mean_pairs": report.mean_pairs,
        "mean_pairs_stderr": report.mean_pairs_stderr,
        "wegner_bound": None if math.isnan(report.wegner_bound) else report.wegner_bound,
        "minami_bound": None if math.isnan(report.minami_bound) else report.minami_bound,
    })
    if report.applicable:
        result.checks["wegner_bound"] = bool(report.wegner_pass)
        result.checks["minami_bound"] = bool(report.minami_pass)

    result.tables["counts"] = pd.DataFrame({
        "realization": [eig.realization for eig in systems],
        "count": [eig.count_in(interval) for eig in systems],
    })
    return result
