import json

import pandas as pd
import pytest

from src.config import Experiment
from src.errors import MissingArtifactsError
from src.experiment_config import load_config
from src.experiments import EXPERIMENT_RUNNERS, ExperimentResult
from src.pipeline import EXIT_CHECK_FAILED, EXIT_OK, execute_experiment, run
from src.reporting import SUMMARY_FILE, emit_plots, version_stamp

BETHE_SETTINGS = ["K=2", "L=3", "realizations=4", "seed=1"]


def _config(experiment, out_dir, overrides=()):
    return load_config(overrides=[*overrides, f"out_dir='{out_dir}'"], experiment=experiment)


def test_bethe_run_writes_summary_and_table(tmp_path):
    config = _config("bethe", tmp_path, BETHE_SETTINGS)
    assert run(config) == EXIT_OK

    summary = json.loads((tmp_path / SUMMARY_FILE).read_text())
    assert summary["experiment"] == "bethe"
    assert summary["seed"] == 1
    assert summary["version"] == version_stamp(config)
    assert "+" in summary["version"]
    assert summary["scalars"]["bethe_average_of_one"] == 1.0
    assert summary["passed"] is True
    assert summary["config"]["realizations"] == 4

    table = pd.read_csv(tmp_path / "bethe.csv")
    assert table["L"].tolist() == [1, 2, 3]
    assert (table["one"] == 1.0).all()
    assert (table["degree"] == 3.0).all()


def test_reruns_give_identical_tables(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    run(_config("bethe", first, BETHE_SETTINGS))
    run(_config("bethe", second, BETHE_SETTINGS))
    assert (first / "bethe.csv").read_bytes() == (second / "bethe.csv").read_bytes()


def test_canopy_chain_run_passes(tmp_path):
    config = _config("canopy_chain", tmp_path, ["L=3"])
    result, runtime = execute_experiment(config)
    assert result.passed
    assert runtime >= 0
    assert set(result.tables["canopy_chain"]["b"]) == {-1.0, 0.0, 0.5}


def test_failed_check_sets_exit_code(tmp_path, monkeypatch):
    def failing(config):
        result = ExperimentResult()
        result.checks["always_fails"] = False
        return result

    monkeypatch.setitem(EXPERIMENT_RUNNERS, Experiment.BETHE, failing)
    config = _config("bethe", tmp_path)
    assert run(config) == EXIT_OK
    assert run(config, check=True) == EXIT_CHECK_FAILED
    assert json.loads((tmp_path / SUMMARY_FILE).read_text())["passed"] is False


def test_emit_plots_for_recognized_tables(tmp_path):
    pd.DataFrame({"realization": [0, 0], "spacing": [0.5, 1.5]}).to_csv(tmp_path / "spacings.csv", index=False)
    pd.DataFrame({"x": [1]}).to_csv(tmp_path / "unrelated.csv", index=False)

    written = emit_plots(tmp_path)
    assert [p.name for p in written] == ["spacing.plot"]
    text = (tmp_path / "spacing.plot").read_text()
    assert '"spacings.csv"' in text
    assert "{csv}" not in text

    assert [p.name for p in emit_plots(tmp_path)] == ["spacing.plot"]
    assert (tmp_path / "spacing.plot").read_text() == text


def test_emit_plots_without_artifacts(tmp_path):
    with pytest.raises(MissingArtifactsError):
        emit_plots(tmp_path)
    with pytest.raises(MissingArtifactsError):
        emit_plots(tmp_path / "missing")
