"""Artifact writers: experiment CSVs, verbatim text dumps and summary.json."""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import numpy as np

from .. import __version__
from ..experiment_config import ExperimentConfig
from ..experiments import ExperimentResult

logger = logging.getLogger(__name__)

SUMMARY_FILE = "summary.json"


def version_stamp(config: ExperimentConfig) -> str:
    """Package version plus the config digest, e.g. ``0.1.0+1a2b3c4d``."""
    return f"{__version__}+{config.digest()}"


def _json_default(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Cannot serialize {type(value).__name__} to JSON")


def build_summary(config: ExperimentConfig, result: ExperimentResult, runtime: float) -> dict[str, Any]:
    return {
        "experiment": config.experiment,
        "version": version_stamp(config),
        "seed": config.seed,
        "config": config.to_dict(),
        "scalars": result.scalars,
        "checks": result.checks,
        "passed": result.passed,
        "runtime_seconds": round(runtime, 3),
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def write_results(out_dir: Path, config: ExperimentConfig, result: ExperimentResult,
                  runtime: float) -> list[Path]:
    """Write every table, text and the summary into ``out_dir``.

    Args:
        out_dir: Target directory, created if missing
        config: Config of the run, echoed into the summary
        result: Experiment output
        runtime: Wall-clock seconds of the experiment

    Returns:
        Paths written, summary last
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    for name, frame in result.tables.items():
        path = out_dir / f"{name}.csv"
        frame.to_csv(path, index=False)
        written.append(path)
        logger.debug("Wrote %s (%d rows)", path, len(frame))

    for name, text in result.texts.items():
        path = out_dir / name
        path.write_text(text)
        written.append(path)

    summary_path = out_dir / SUMMARY_FILE
    summary = build_summary(config, result, runtime)
    summary_path.write_text(json.dumps(summary, indent=2, sort_keys=True, default=_json_default) + "\n")
    written.append(summary_path)
    return written
