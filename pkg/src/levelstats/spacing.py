"""Level spacings, reference spacing laws and count statistics of rescaled processes."""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np
from scipy import stats

from ..errors import InsufficientDataError, ParameterError
from ..spectral import RescaledPointProcess

logger = logging.getLogger(__name__)

# Below this many realizations the count pmf is too coarse to compare
MIN_COUNT_REALIZATIONS = 200


def exponential_cdf(s: np.ndarray | float) -> np.ndarray | float:
    """Poisson spacing law 1 - e^{-s}."""
    return stats.expon.cdf(s)


def wigner_surmise_cdf(s: np.ndarray | float) -> np.ndarray | float:
    """GOE Wigner surmise 1 - exp(-pi s^2 / 4) for s >= 0."""
    s = np.clip(s, 0.0, None)
    return 1.0 - np.exp(-np.pi * s ** 2 / 4.0)


def wigner_surmise_pdf(s: np.ndarray | float) -> np.ndarray | float:
    s = np.clip(s, 0.0, None)
    return np.pi * s / 2.0 * np.exp(-np.pi * s ** 2 / 4.0)


# Reference spacing CDFs by tag
REFERENCE_CDFS: dict[str, Callable] = {
    "exponential_unit_mean": exponential_cdf,
    "wigner_goe_surmise": wigner_surmise_cdf,
}


@dataclass(frozen=True)
class SpacingSample:
    """Pooled nearest-neighbor spacings normalized to unit mean.

    ``raw_mean`` is the mean before normalization and ``intensity`` the mean
    number of points per unit rescaled length.
    """
    spacings: np.ndarray
    realizations: np.ndarray
    raw_mean: float
    intensity: float
    metadata: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CountStatistics:
    interval: tuple[float, float]
    counts: np.ndarray
    pmf: np.ndarray
    intensity: float
    poisson_mean: float
    tv_distance: float


def spacing_statistics(processes: list[RescaledPointProcess],
                       metadata: dict[str, Any] | None = None) -> SpacingSample:
    """Consecutive gaps of every process, pooled and normalized to unit empirical mean.

    Raises:
        InsufficientDataError: If no process has two points, or all gaps vanish
    """
    gaps, owners = [], []
    for process in processes:
        if process.points.shape[0] >= 2:
            diffs = np.diff(process.points)
            gaps.append(diffs)
            owners.append(np.full(diffs.shape[0], process.realization, dtype=np.int64))

    if not gaps:
        raise InsufficientDataError(f"No spacings in {len(processes)} process(es); need two points in a window")

    raw = np.concatenate(gaps)
    raw_mean = float(raw.mean())
    if raw_mean <= 0:
        raise InsufficientDataError("All spacings are zero; cannot normalize")

    window_length = np.mean([2.0 * p.window for p in processes])
    intensity = float(np.mean([p.points.shape[0] for p in processes]) / window_length)

    return SpacingSample(
        spacings=raw / raw_mean,
        realizations=np.concatenate(owners),
        raw_mean=raw_mean,
        intensity=intensity,
        metadata=dict(metadata or {}),
    )


def ks_distance(sample: np.ndarray, reference: str) -> float:
    """Kolmogorov sup-distance between the empirical CDF of ``sample`` and a reference law.

    Args:
        sample: Spacings
        reference: ``exponential_unit_mean`` or ``wigner_goe_surmise``

    Raises:
        InsufficientDataError: If the sample is empty
        ParameterError: If the reference tag is unknown
    """
    sample = np.asarray(sample, dtype=float)
    if sample.size == 0:
        raise InsufficientDataError("KS distance of an empty sample")
    if reference not in REFERENCE_CDFS:
        raise ParameterError(f"Unknown spacing reference: {reference}. "
                             f"Supported: {', '.join(REFERENCE_CDFS)}")
    return float(stats.kstest(sample, REFERENCE_CDFS[reference]).statistic)


def count_distribution(processes: list[RescaledPointProcess], interval: tuple[float, float],
                       intensity: float) -> CountStatistics:
    """Empirical count pmf on ``interval`` and its total-variation distance to Poisson(d |I|)."""
    if len(processes) < MIN_COUNT_REALIZATIONS:
        logger.warning("Count distribution from %d realizations (recommended >= %d)",
                       len(processes), MIN_COUNT_REALIZATIONS)

    lo, hi = interval
    length = max(hi - lo, 0.0)
    if length == 0.0:
        counts = np.zeros(len(processes), dtype=np.int64)
    else:
        counts = np.array([p.count_in(interval) for p in processes], dtype=np.int64)

    pmf = np.bincount(counts) / max(len(counts), 1) if len(counts) else np.zeros(1)
    mean = float(intensity) * length
    reference = stats.poisson.pmf(np.arange(pmf.shape[0]), mean)
    tail = 1.0 - reference.sum()
    tv = 0.5 * (np.abs(pmf - reference).sum() + max(tail, 0.0))

    return CountStatistics(
        interval=(float(lo), float(hi)),
        counts=counts,
        pmf=pmf,
        intensity=float(intensity),
        poisson_mean=mean,
        tv_distance=float(tv),
    )
