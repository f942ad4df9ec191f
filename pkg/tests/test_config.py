from pathlib import Path

import pytest

from src.config import (
    EXPORT_PATH, THREADS_ENV_VAR, Experiment, get_experiment_export_path, get_thread_count, regular_tree_size
)
from src.disorder import UniformLaw
from src.errors import ConfigError
from src.experiment_config import ExperimentConfig, key_lines, load_config, parse_override


SPACING_TOML = """experiment = "spacing"
K = 3
L = 5
E_list = [0.0, 1]
realizations = 50
seed = 9

[distribution]
type = "uniform"
p1 = -1.0
p2 = 1.0
"""


def test_load_config_from_toml(write_config):
    config = load_config(write_config(SPACING_TOML))
    assert config.experiment_kind is Experiment.SPACING
    assert (config.K, config.L, config.realizations, config.seed) == (3, 5, 50, 9)
    assert config.E_list == [0.0, 1]
    law = config.law()
    assert isinstance(law, UniformLaw)
    assert law.quantile(0.5) == pytest.approx(0.0)


def test_overrides_and_command_line_experiment_win(write_config):
    config = load_config(write_config(SPACING_TOML), ["L=4", "distribution.p2=3", "eta=1"],
                         experiment="wegner_minami")
    assert config.experiment == "wegner_minami"
    assert config.L == 4
    assert config.distribution.p2 == 3
    assert config.eta == 1.0
    assert isinstance(config.eta, float)


def test_unknown_key_names_its_line(write_config):
    path = write_config('experiment = "bethe"\nK = 2\nfoo = 1\n')
    with pytest.raises(ConfigError) as info:
        load_config(path)
    assert info.value.line == 3
    assert str(info.value).startswith(f"{path}:3:")


def test_unknown_distribution_key(write_config):
    path = write_config('experiment = "bethe"\n[distribution]\nmean = 1.0\n')
    with pytest.raises(ConfigError) as info:
        load_config(path)
    assert info.value.line == 3


def test_missing_and_malformed_files(tmp_path, write_config):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.toml")
    with pytest.raises(ConfigError):
        load_config(write_config("K = = 2\n"))


@pytest.mark.parametrize("overrides", [
    ["realizations=0"],
    ["K=1"],
    ["eta=0"],
    ["interval=[0.6, 0.4]"],
    ["distribution.type=binomial"],
])
def test_invalid_values_are_rejected(overrides):
    with pytest.raises(ConfigError):
        load_config(overrides=overrides, experiment="bethe")


def test_invalid_value_reports_file_line(write_config):
    path = write_config('experiment = "bethe"\n\nrealizations = 0\n')
    with pytest.raises(ConfigError) as info:
        load_config(path)
    assert info.value.line == 3


def test_unknown_experiment():
    with pytest.raises(ConfigError, match="Unknown experiment"):
        load_config(experiment="percolation")


def test_dense_cap_is_enforced_before_running():
    with pytest.raises(ConfigError, match="dense_cap"):
        load_config(overrides=["K=2", "L=13"], experiment="spacing")
    config = load_config(overrides=["K=2", "L=12"], experiment="spacing")
    assert regular_tree_size(config.K, config.L) <= config.dense_cap
    with pytest.raises(ConfigError):
        load_config(overrides=["L_list=[4, 14]"], experiment="negligibility")


def test_fractional_exponents_must_lie_below_tau():
    with pytest.raises(ConfigError):
        load_config(overrides=["s_list=[0.2, 0.6]"], experiment="fm_decay")
    config = load_config(overrides=["s_list=[0.1, 0.4]"], experiment="fm_decay")
    assert config.s_list == [0.1, 0.4]


def test_tau_prime_bound():
    with pytest.raises(ConfigError, match="tau_prime"):
        load_config(overrides=["tau_prime=0.3"], experiment="sc_build")
    assert load_config(overrides=["tau_prime=0.3"], experiment="bethe").tau_prime == 0.3


def test_parse_override():
    assert parse_override("L_list=[4, 6]") == ("L_list", [4, 6])
    assert parse_override("distribution.type = uniform") == ("distribution.type", "uniform")
    assert parse_override("dump=true") == ("dump", True)
    with pytest.raises(ConfigError):
        parse_override("L")


def test_list_keys_reject_scalars():
    with pytest.raises(ConfigError, match="expects a list"):
        load_config(overrides=["L_list=4"], experiment="bethe")


def test_key_lines():
    assert key_lines(SPACING_TOML) == {
        "experiment": 1, "K": 2, "L": 3, "E_list": 4, "realizations": 5, "seed": 6,
        "distribution": 8, "distribution.type": 9, "distribution.p1": 10, "distribution.p2": 11,
    }


def test_digest_tracks_every_value():
    a = ExperimentConfig(experiment="bethe")
    b = ExperimentConfig(experiment="bethe")
    assert a.digest() == b.digest()
    assert len(a.digest()) == 8
    b.distribution.p2 = 2.0
    assert a.digest() != b.digest()


def test_thread_count(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    assert get_thread_count() == 1
    assert get_thread_count(4) == 4
    assert get_thread_count(0) == 1
    monkeypatch.setenv(THREADS_ENV_VAR, "3")
    assert get_thread_count() == 3
    assert get_thread_count(2) == 2
    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    with pytest.raises(ValueError):
        get_thread_count()


def test_export_path():
    assert get_experiment_export_path(None, Experiment.DOS) == Path(EXPORT_PATH) / "dos"
    assert get_experiment_export_path("runs/a", Experiment.DOS) == Path("runs/a")


@pytest.mark.parametrize("path", sorted((Path(__file__).parent.parent / "configs").glob("*.toml")),
                         ids=lambda p: p.stem)
def test_shipped_configs_are_valid(path):
    config = load_config(path)
    assert config.experiment_kind.value in path.stem
