"""Canopy density of states: Monte Carlo against the exact Cauchy recursion."""

import numpy as np
import pandas as pd

from ..dos import DosEstimate, canopy_dos_exact_cauchy, canopy_dos_mc
from ..errors import UnsupportedLawError
from ..experiment_config import ExperimentConfig
from .base import ExperimentResult, cauchy_parameters, energy_grid, threads_for


def dos_frame(estimate: DosEstimate) -> pd.DataFrame:
    return pd.DataFrame({
        "energy": estimate.energy_grid,
        "density": estimate.density,
        "stderr": estimate.stderr,
        "method": estimate.method.value,
        "eta": estimate.eta,
    })


def run_dos(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    grid = energy_grid(config)
    mc = canopy_dos_mc(config.K, law, config.b, grid, config.eta, config.depth, config.n_max,
                       config.realizations, config.seed, threads_for(config))

    result = ExperimentResult()
    frames = [dos_frame(mc)]
    result.scalars.update({
        "depth": config.depth,
        "n_max": config.n_max,
        "tail_bound": mc.tail_bound,
        "max_density": float(mc.density.max()),
    })

    try:
        rho_sup = law.density_sup()
        result.scalars["density_sup"] = rho_sup
        result.checks["wegner_density_bound"] = bool(np.all(mc.density <= rho_sup + 3.0 * mc.stderr))
    except UnsupportedLawError:
        pass

    cauchy = cauchy_parameters(law)
    if cauchy is not None:
        exact = canopy_dos_exact_cauchy(config.K, cauchy[0], cauchy[1], config.b, grid, config.eta,
                                        depth=config.depth, n_max=config.n_max)
        frames.append(dos_frame(exact))
        deviation = np.abs(mc.density - exact.density)
        result.scalars["max_deviation_sigmas"] = float(np.max(deviation / np.maximum(mc.stderr, 1e-300)))
        result.checks["mc_matches_exact"] = bool(np.all(deviation <= 3.0 * mc.stderr + 1e-12))

    result.tables["dos"] = pd.concat(frames, ignore_index=True)
    return result
