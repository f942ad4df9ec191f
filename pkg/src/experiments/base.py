"""Shared result type and helpers for experiment runners."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np
import pandas as pd

from ..config import get_thread_count
from ..disorder import CauchyLaw, DisorderLaw
from ..experiment_config import ExperimentConfig


@dataclass
class ExperimentResult:
    """What an experiment hands to the writer.

    tables become ``<name>.csv``, texts become ``<name>`` verbatim, scalars and
    checks go into summary.json.
    """
    scalars: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    tables: dict[str, pd.DataFrame] = field(default_factory=dict)
    texts: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def threads_for(config: ExperimentConfig) -> int:
    return get_thread_count(config.threads)


def energy_grid(config: ExperimentConfig) -> np.ndarray:
    return np.linspace(config.grid_min, config.grid_max, config.grid_points)


def within_sigmas(value: float, reference: float, stderr: float, sigmas: float = 3.0,
                  floor: float = 1e-12) -> bool:
    return bool(abs(value - reference) <= sigmas * stderr + floor)


def cauchy_parameters(law: DisorderLaw) -> tuple[float, float] | None:
    """(center, scale) for Cauchy laws, None otherwise."""
    if isinstance(law, CauchyLaw):
        return law.center_value, law.scale
    return None
