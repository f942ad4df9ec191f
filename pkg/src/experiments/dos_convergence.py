"""Convergence of the finite-volume density of states to the canopy density of states."""

import math

import pandas as pd

from ..dos import canopy_dos_exact_cauchy, canopy_dos_mc, stieltjes_dos
from ..experiment_config import ExperimentConfig
from ..graphs import build_regular_tree
from ..hamiltonian import sample_operator
from .base import ExperimentResult, cauchy_parameters, threads_for

# Test function Im (x - E - i)^{-1}
TEST_POINT_IMAG = 1.0
RELATIVE_TOL = 0.05


def canopy_test_value(config: ExperimentConfig, z: complex) -> float:
    """sum_n w_n E Im G(x_n, x_n; z) on the canopy."""
    law = config.law()
    cauchy = cauchy_parameters(law)
    if cauchy is not None:
        estimate = canopy_dos_exact_cauchy(config.K, cauchy[0], cauchy[1], config.b, [z.real], z.imag,
                                           depth=None, n_max=config.n_max)
    else:
        estimate = canopy_dos_mc(config.K, law, config.b, [z.real], z.imag, config.depth, config.n_max,
                                 config.realizations, config.seed, threads_for(config))
    return math.pi * float(estimate.density[0])


def run_dos_convergence(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    z = complex(config.E, TEST_POINT_IMAG)
    canopy = canopy_test_value(config, z)

    rows = []
    for L in config.L_list:
        tree = build_regular_tree(config.K, L)
        ops = [sample_operator(tree, law, config.b, config.seed, r) for r in range(config.realizations)]
        value, stderr = stieltjes_dos(ops, z)
        rows.append({"L": L, "value": value, "stderr": stderr, "canopy": canopy,
                     "abs_diff": abs(value - canopy)})
    frame = pd.DataFrame(rows, columns=["L", "value", "stderr", "canopy", "abs_diff"])

    first, last = frame.iloc[0], frame.iloc[-1]
    result = ExperimentResult()
    result.scalars.update({
        "canopy_value": canopy,
        "final_abs_diff": float(last["abs_diff"]),
        "final_relative_diff": float(last["abs_diff"] / abs(canopy)),
    })
    result.checks.update({
        "difference_decreases": bool(last["abs_diff"] < first["abs_diff"]),
        "final_relative_small": bool(last["abs_diff"] / abs(canopy) < RELATIVE_TOL),
    })
    result.tables["dos_convergence"] = frame
    return result
