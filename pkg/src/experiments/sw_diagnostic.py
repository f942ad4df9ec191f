"""Simon-Wolff inverse quantity on the sc-designed backbone against a canopy baseline."""

import logging

import numpy as np
import pandas as pd
from scipy import stats

from ..config import regular_tree_size
from ..decay import canopy_column_moments, square_summability_diagnostic
from ..experiment_config import ExperimentConfig
from ..graphs import build_canopy_truncation, build_decorated_backbone, leftmost_ray
from ..hamiltonian import sample_operator
from .base import ExperimentResult, threads_for
from .sc_build import plan_sc_backbone

logger = logging.getLogger(__name__)

CONTRAST_ETA = 1e-3
SIGNIFICANCE = 0.05
REPORTED_QUANTILES = (0.25, 0.5, 0.75)


def matched_canopy_depth(K: int, vertex_count: int) -> int:
    """Smallest D with |T_D| >= vertex_count."""
    D = 0
    while regular_tree_size(K, D) < vertex_count:
        D += 1
    return D


def inverse_quantities(graph, x0: int, config: ExperimentConfig, etas: list[float]) -> np.ndarray:
    """Shape (R, len(etas)) array of the inverse quantity, one row per realization."""
    law = config.law()
    rows = []
    for r in range(config.realizations):
        op = sample_operator(graph, law, config.b, config.seed, r)
        rows.append(square_summability_diagnostic(op, x0, config.E, tuple(etas)))
    return np.asarray(rows)


def quantile_frame(label: str, etas: list[float], values: np.ndarray) -> pd.DataFrame:
    rows = [
        {"graph": label, "eta": eta, "quantile": q, "inverse_quantity": float(np.quantile(values[:, j], q))}
        for j, eta in enumerate(etas)
        for q in REPORTED_QUANTILES
    ]
    return pd.DataFrame(rows, columns=["graph", "eta", "quantile", "inverse_quantity"])


def run_sw_diagnostic(config: ExperimentConfig) -> ExperimentResult:
    plan = plan_sc_backbone(config)
    backbone = build_decorated_backbone(config.K, plan.schedule.depths.tolist())
    D = matched_canopy_depth(config.K, backbone.vertex_count)
    canopy = build_canopy_truncation(config.K, D, config.b)
    logger.info("Backbone with %d vertices against canopy truncation D=%d (%d vertices)",
                backbone.vertex_count, D, canopy.vertex_count)

    etas = sorted(set(config.eta_ladder) | {CONTRAST_ETA}, reverse=True)
    j = etas.index(CONTRAST_ETA)
    sc_values = inverse_quantities(backbone, int(backbone.backbone[0]), config, etas)
    canopy_values = inverse_quantities(canopy, int(leftmost_ray(canopy)[-1]), config, etas)

    test = stats.mannwhitneyu(sc_values[:, j], canopy_values[:, j], alternative="less")

    layer_moments = canopy_column_moments(config.law(), config.K, config.b, 0, config.L_list, config.E,
                                          config.eta, config.s, config.realizations, config.seed,
                                          threads_for(config))

    result = ExperimentResult()
    result.scalars.update({
        "depths": plan.schedule.depths.tolist(),
        "backbone_vertices": backbone.vertex_count,
        "canopy_depth": D,
        "sc_median": float(np.median(sc_values[:, j])),
        "canopy_median": float(np.median(canopy_values[:, j])),
        "mann_whitney_p": float(test.pvalue),
        "canopy_column_moments": dict(zip(map(str, layer_moments["L"]), layer_moments["moment"])),
    })
    result.checks["sc_below_canopy"] = bool(test.pvalue < SIGNIFICANCE)
    result.tables["sw_diagnostic"] = pd.concat(
        [quantile_frame("sc_backbone", etas, sc_values), quantile_frame("canopy", etas, canopy_values)],
        ignore_index=True,
    )
    result.tables["canopy_column_moments"] = layer_moments
    return result
