"""Poisson statistics of the rescaled eigenvalues of T_L."""

import logging

import numpy as np
import pandas as pd

from ..dos import canopy_dos_exact_cauchy, canopy_dos_mc
from ..ensemble import mc_mean
from ..experiment_config import ExperimentConfig
from ..graphs import build_regular_tree, format_graph
from ..hamiltonian import format_matrix, sample_operator
from ..levelstats import count_distribution, ks_distance, spacing_statistics
from ..spectral import diagonalize_ensemble, eigenvalue_frame, rescaled_process
from .base import ExperimentResult, cauchy_parameters, threads_for

logger = logging.getLogger(__name__)

# Thresholds of the spacing acceptance checks
KS_EXPONENTIAL_MAX = 0.05
TV_POISSON_MAX = 0.05
INTENSITY_RELATIVE_TOL = 0.1


def spacing_frame(spacings: np.ndarray, realizations: np.ndarray) -> pd.DataFrame:
    frame = pd.DataFrame({"realization": realizations, "spacing": spacings})
    frame.insert(1, "index", frame.groupby("realization").cumcount())
    return frame


def canopy_intensity(config: ExperimentConfig) -> float:
    """d_C(E), exact for Cauchy disorder and Monte Carlo otherwise."""
    law = config.law()
    cauchy = cauchy_parameters(law)
    if cauchy is not None:
        estimate = canopy_dos_exact_cauchy(config.K, cauchy[0], cauchy[1], config.b, [config.E],
                                           config.eta, depth=None, n_max=config.n_max)
    else:
        estimate = canopy_dos_mc(config.K, law, config.b, [config.E], config.eta, config.depth,
                                 config.n_max, config.realizations, config.seed, threads_for(config))
    return float(estimate.density[0])


def run_spacing(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    tree = build_regular_tree(config.K, config.L)
    volume = tree.vertex_count

    systems = diagonalize_ensemble(tree, law, config.b, config.seed, config.realizations,
                                   threads=threads_for(config), dense_cap=config.dense_cap)
    processes = [rescaled_process(eig, config.E, volume, config.window) for eig in systems]

    sample = spacing_statistics(processes, metadata={
        "E": config.E, "L": config.L, "K": config.K, "law": law.describe(), "b": config.b,
    })
    ks_exp = ks_distance(sample.spacings, "exponential_unit_mean")
    ks_goe = ks_distance(sample.spacings, "wigner_goe_surmise")

    interval = (-config.w, config.w)
    counts = count_distribution(processes, interval, sample.intensity)

    per_realization = np.array([p.points.shape[0] / (2.0 * p.window) for p in processes])
    _, intensity_err = mc_mean(per_realization)
    expected = canopy_intensity(config)
    logger.info("Empirical intensity %.4f vs canopy dos %.4f", sample.intensity, expected)

    result = ExperimentResult()
    result.scalars.update({
        "volume": volume,
        "spacing_count": int(sample.spacings.shape[0]),
        "raw_mean_spacing": sample.raw_mean,
        "ks_exponential": ks_exp,
        "ks_wigner": ks_goe,
        "intensity": sample.intensity,
        "intensity_stderr": float(intensity_err),
        "canopy_dos": expected,
        "count_tv_poisson": counts.tv_distance,
        "count_poisson_mean": counts.poisson_mean,
    })
    result.checks.update({
        "ks_exponential_small": ks_exp < KS_EXPONENTIAL_MAX,
        "exponential_closer_than_wigner": ks_exp < ks_goe,
        "counts_poisson": counts.tv_distance < TV_POISSON_MAX,
        "intensity_matches_dos": bool(abs(sample.intensity - expected)
                                      <= 3.0 * intensity_err + INTENSITY_RELATIVE_TOL * expected),
    })
    result.tables["spacings"] = spacing_frame(sample.spacings, sample.realizations)
    result.tables["counts"] = pd.DataFrame({
        "realization": [p.realization for p in processes],
        "count": counts.counts,
    })

    if config.dump:
        result.tables["eigenvalues"] = eigenvalue_frame(systems)
        result.texts["graph.txt"] = format_graph(tree)
        result.texts["matrix.txt"] = format_matrix(sample_operator(tree, law, config.b, config.seed, 0))
    return result
