"""Configuration constants and utilities for the canopy spectra experiments."""

import os
from enum import Enum
from pathlib import Path

# Configuration Constants
EXPORT_PATH = "exports/"
THREADS_ENV_VAR = "CANOPY_SPECTRA_THREADS"

# Largest operator handed to a dense eigensolver (K=2 trees up to L=12)
DENSE_CAP = 8192

# Hard ceiling on constructed graphs, keeps index arrays in int64 comfortably
MAX_VERTICES = 2**31 - 1

# Pivots below this magnitude are reported instead of producing inf
SINGULAR_PIVOT = 1e-300

# Rescaled window in mean-spacing units
DEFAULT_WINDOW = 20.0

# Regularizations used for "E + i0" boundary values
DEFAULT_ETA_LADDER = (1e-2, 1e-3, 1e-4)

# Deepest canopy layer resolved explicitly; K**-12 is below typical MC error
DEFAULT_N_MAX = 12

# Configuration-model pairings tried before giving up
RRG_MAX_ATTEMPTS = 1000

# Iteration cap for the canopy self-energy fixed point
FIXED_POINT_MAX_ITER = 100_000

# Realizations handed to one worker call
DEFAULT_CHUNK_SIZE = 16


class TreeKind(Enum):
    """Supported tree families"""
    REGULAR = "regular"
    HOMOGENEOUS = "homogeneous"
    CANOPY_TRUNCATION = "canopy_truncation"
    DECORATED_BACKBONE = "decorated_backbone"


class DistributionType(Enum):
    """Supported single-site potential distributions"""
    CAUCHY = "cauchy"
    UNIFORM = "uniform"
    GAUSSIAN = "gaussian"
    CONSTANT = "constant"


class DosMethod(Enum):
    """How a density-of-states estimate was produced"""
    MC_CANOPY = "mc_canopy"
    FINITE_VOLUME_HISTOGRAM = "finite_volume_histogram"
    EXACT_CAUCHY = "exact_cauchy"


class Experiment(Enum):
    """Experiments runnable from the command line"""
    SPACING = "spacing"
    DOS = "dos"
    DOS_CONVERGENCE = "dos_convergence"
    WEGNER_MINAMI = "wegner_minami"
    NEGLIGIBILITY = "negligibility"
    DIVISIBILITY = "divisibility"
    LYAPUNOV = "lyapunov"
    FM_DECAY = "fm_decay"
    CANOPY_CHAIN = "canopy_chain"
    SC_BUILD = "sc_build"
    SW_DIAGNOSTIC = "sw_diagnostic"
    RRG_CONTRAST = "rrg_contrast"
    BETHE = "bethe"


def get_experiment_export_path(out_dir: str | None, experiment: Experiment) -> Path:
    """Get export directory for one experiment run.

    Args:
        out_dir: Explicit output directory, or None for exports/{experiment}/

    Returns:
        Path to the output directory (not created)
    """
    if out_dir:
        return Path(out_dir)
    return Path(EXPORT_PATH) / experiment.value


def get_thread_count(configured: int | None = None) -> int:
    """Resolve the worker count.

    Args:
        configured: Value from the experiment config, takes precedence

    Returns:
        Worker count, at least 1

    Raises:
        ValueError: If the environment variable is not an integer
    """
    if configured is not None:
        return max(1, int(configured))

    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1

    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from None


def regular_tree_size(K: int, L: int) -> int:
    """Vertex count (K^{L+1} - 1)/(K - 1) of the regular rooted tree T_L."""
    return (K ** (L + 1) - 1) // (K - 1)
