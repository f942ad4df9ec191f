"""Finite-volume Lyapunov exponents with their lower bounds and the single-site closed form."""

import math

import numpy as np
import pandas as pd

from ..decay import lyapunov_finite, lyapunov_lower_bound, sample_root_green
from ..errors import UnsupportedLawError
from ..experiment_config import ExperimentConfig
from .base import ExperimentResult, cauchy_parameters, threads_for, within_sigmas


def single_site_cauchy_lyapunov(K: int, center: float, scale: float, E: float, eta: float) -> float:
    """-ln sqrt(K) + ln|center - E - i(scale + eta)|, the exact one-vertex value."""
    return -math.log(math.sqrt(K)) + math.log(abs(complex(center - E, -(scale + eta))))


def run_lyapunov(config: ExperimentConfig) -> ExperimentResult:
    law = config.law()
    threads = threads_for(config)
    try:
        rho_sup = law.density_sup()
    except UnsupportedLawError:
        rho_sup = None
    cauchy = cauchy_parameters(law)

    result = ExperimentResult()
    rows = []
    for E in config.E_list:
        gamma, stderr = lyapunov_finite(law, config.K, config.b, config.L, E, config.eta,
                                        config.realizations, config.seed, threads)
        green = sample_root_green(law, config.K, config.b, config.L, [E + 1j * config.eta],
                                  config.realizations, config.seed, threads)[:, 0]
        bound = lyapunov_lower_bound(np.abs(green) ** -2, config.K, rho_sup, law.tau)
        row = {"E": E, "gamma": gamma, "stderr": stderr, "lower_bound": bound.value}

        result.checks[f"lower_bound_consistent_E{E:g}"] = bool(bound.value <= gamma + 3.0 * stderr)

        if cauchy is not None:
            single, single_err = lyapunov_finite(law, config.K, config.b, 0, E, config.eta,
                                                 config.realizations, config.seed, threads)
            exact = single_site_cauchy_lyapunov(config.K, cauchy[0] + config.b, cauchy[1], E, config.eta)
            row.update({"single_site": single, "single_site_stderr": single_err, "closed_form": exact})
            result.checks[f"single_site_closed_form_E{E:g}"] = within_sigmas(single, exact, single_err)
        rows.append(row)

    frame = pd.DataFrame(rows)
    result.scalars.update({
        "L": config.L,
        "eta": config.eta,
        "gamma": dict(zip(map(str, frame["E"]), frame["gamma"])),
    })
    result.tables["lyapunov"] = frame
    return result
