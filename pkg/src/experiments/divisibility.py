"""Infinite divisibility: subtree processes against the full rescaled process."""

import pandas as pd

from ..experiment_config import ExperimentConfig
from ..graphs import build_regular_tree
from ..hamiltonian import sample_operator
from ..levelstats import divisibility_gap
from .base import ExperimentResult

# Test point of phi_z in rescaled units
TEST_POINT = 1j


def run_divisibility(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    rows = []
    for L in config.L_list:
        tree = build_regular_tree(config.K, L)
        # same indices at every L, so comparisons across L are paired
        ops = [sample_operator(tree, law, config.b, config.seed, r) for r in range(config.realizations)]
        for N in sorted({0, config.N}):
            rows.append({"L": L, "N": N, "gap": divisibility_gap(ops, N, config.E, TEST_POINT)})
    frame = pd.DataFrame(rows, columns=["L", "N", "gap"])

    zero = frame[frame["N"] == 0]["gap"]
    split = frame[frame["N"] == config.N]["gap"].to_numpy()

    result = ExperimentResult()
    result.scalars.update({
        "max_gap_n0": float(zero.max()),
        "first_gap": float(split[0]),
        "final_gap": float(split[-1]),
    })
    result.checks["gap_zero_at_n0"] = bool((zero == 0.0).all())
    if config.N > 0 and len(split) >= 2:
        result.checks["gap_decreases"] = bool(split[-1] < split[0])
    result.tables["divisibility"] = frame
    return result
