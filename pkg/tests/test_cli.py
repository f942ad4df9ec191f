import json

import pytest

from src import __version__
from src.main import main
from src.reporting import SUMMARY_FILE


def _exit_code(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code


def test_bethe_run(tmp_path, capsys):
    argv = ["bethe", "--set", "L=2", "--set", "realizations=2", "--out-dir", str(tmp_path), "--check"]
    assert _exit_code(argv) == 0
    out = capsys.readouterr().out
    assert "=== Phase 3: Acceptance Checks ===" in out
    assert json.loads((tmp_path / SUMMARY_FILE).read_text())["config"]["out_dir"] == str(tmp_path)


def test_config_file_and_plots(tmp_path, write_config):
    path = write_config('K = 3\nL = 2\nrealizations = 2\n')
    assert _exit_code(["bethe", "--config", str(path), "--out-dir", str(tmp_path / "run")]) == 0
    assert _exit_code(["plots", "--out-dir", str(tmp_path / "run")]) == 0


def test_invalid_config_exits_with_error(tmp_path, capsys):
    assert _exit_code(["bethe", "--set", "realizations=0", "--out-dir", str(tmp_path)]) == 1
    assert "Failed:" in capsys.readouterr().out
    assert not (tmp_path / SUMMARY_FILE).exists()


def test_plots_needs_an_output_directory(capsys):
    assert _exit_code(["plots"]) == 1
    assert "--out-dir" in capsys.readouterr().out


def test_plots_on_empty_directory(tmp_path):
    assert _exit_code(["plots", "--out-dir", str(tmp_path)]) == 1


def test_unknown_experiment_is_a_usage_error():
    assert _exit_code(["percolation"]) == 2


def test_version(capsys):
    assert _exit_code(["--version"]) == 0
    assert __version__ in capsys.readouterr().out
