"""Weighted log-linear decay fits."""

from dataclasses import dataclass

import numpy as np

from ..errors import InsufficientDataError


@dataclass(frozen=True)
class DecayFit:
    """Exponential decay fit log m(d) = a - rate * d.

    ``reference_rate`` is the rate the fit is compared against (s ln sqrt(K) for
    fractional moments, 1/lambda for correlators) and ``excess`` the difference.
    """
    distances: np.ndarray
    log_values: np.ndarray
    log_stderr: np.ndarray
    rate: float
    rate_stderr: float
    intercept: float
    residuals: np.ndarray
    reference_rate: float = 0.0

    @property
    def excess(self) -> float:
        return self.rate - self.reference_rate

    def significant_excess(self, sigmas: float = 3.0) -> bool:
        return self.excess >= sigmas * self.rate_stderr and self.rate_stderr > 0


def fit_decay(distances: np.ndarray, log_values: np.ndarray, log_stderr: np.ndarray,
              reference_rate: float = 0.0) -> DecayFit:
    """Weighted least squares with weights 1/stderr; unweighted when any stderr vanishes.

    Raises:
        InsufficientDataError: With fewer than two points
    """
    d = np.asarray(distances, dtype=float)
    y = np.asarray(log_values, dtype=float)
    err = np.asarray(log_stderr, dtype=float)
    if d.shape[0] < 2:
        raise InsufficientDataError(f"Decay fit needs two distances, got {d.shape[0]}")

    if np.all(err > 0):
        coef, cov = np.polyfit(d, y, 1, w=1.0 / err, cov="unscaled")
        slope_err = float(np.sqrt(cov[0, 0]))
    else:
        coef = np.polyfit(d, y, 1)
        slope_err = 0.0

    slope, intercept = float(coef[0]), float(coef[1])
    return DecayFit(
        distances=np.asarray(distances),
        log_values=y,
        log_stderr=err,
        rate=-slope,
        rate_stderr=slope_err,
        intercept=intercept,
        residuals=y - (intercept + slope * d),
        reference_rate=float(reference_rate),
    )
