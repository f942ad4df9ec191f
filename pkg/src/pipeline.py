"""Experiment orchestration: run, write artifacts, evaluate checks."""

import time
from pathlib import Path

from .config import get_experiment_export_path
from .experiment_config import ExperimentConfig
from .experiments import EXPERIMENT_RUNNERS, ExperimentResult
from .reporting import write_results

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2


def execute_experiment(config: ExperimentConfig) -> tuple[ExperimentResult, float]:
    """Dispatch to the experiment runner and time it.

    Returns:
        Tuple of (result, runtime in seconds)
    """
    runner = EXPERIMENT_RUNNERS[config.experiment_kind]
    start = time.perf_counter()
    result = runner(config)
    return result, time.perf_counter() - start


def report_checks(result: ExperimentResult) -> None:
    if not result.checks:
        print("No acceptance checks for this experiment")
        return
    width = max(len(name) for name in result.checks)
    for name, passed in result.checks.items():
        print(f"  {name:<{width}}  {'PASS' if passed else 'FAIL'}")


def run(config: ExperimentConfig, check: bool = False) -> int:
    """Execute one experiment end to end.

    Args:
        config: Validated experiment config
        check: Turn failed acceptance checks into exit code 2

    Returns:
        Process exit code: 0 ok, 2 failed checks in check mode
    """
    out_dir = get_experiment_export_path(config.out_dir, config.experiment_kind)
    print(f"Starting {config.experiment} with {config.realizations} realizations (seed {config.seed})")

    # Phase 1: Experiment
    print("\n=== Phase 1: Experiment ===")
    result, runtime = execute_experiment(config)
    print(f"Finished in {runtime:.2f} s")

    # Phase 2: Artifacts
    print("\n=== Phase 2: Artifacts ===")
    written = write_results(Path(out_dir), config, result, runtime)
    print(f"Wrote {len(written)} file(s) to {out_dir}")
    for path in written:
        print(f"  - {path.name}")

    # Phase 3: Acceptance checks
    print("\n=== Phase 3: Acceptance Checks ===")
    report_checks(result)

    if check and not result.passed:
        print(f"\nChecks failed for {config.experiment}")
        return EXIT_CHECK_FAILED

    print(f"\nExperiment {config.experiment} complete")
    return EXIT_OK
