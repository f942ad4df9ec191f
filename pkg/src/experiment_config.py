"""Experiment configuration: TOML files plus command-line overrides."""

import hashlib
import json
import re
import tomllib
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

from .config import (
    DEFAULT_ETA_LADDER, DEFAULT_N_MAX, DEFAULT_WINDOW, DENSE_CAP, Experiment, regular_tree_size
)
from .disorder import DisorderLaw, law_from_spec
from .errors import ConfigError, ParameterError

DISTRIBUTION_TABLE = "distribution"

# Experiments that diagonalize T_L densely, with the config keys naming their depths
DENSE_DEPTH_KEYS = {
    Experiment.SPACING: ("L",),
    Experiment.WEGNER_MINAMI: ("L",),
    Experiment.NEGLIGIBILITY: ("L_list",),
    Experiment.DIVISIBILITY: ("L_list",),
    Experiment.CANOPY_CHAIN: ("L",),
}


@dataclass
class DistributionSpec:
    """The ``[distribution]`` table."""
    type: str = "cauchy"
    p1: float = 0.0
    p2: float = 1.0
    tau: float | None = None


@dataclass
class ExperimentConfig:
    """Parameters of one experiment run; unused keys are ignored by each experiment."""
    experiment: str = ""
    K: int = 2
    L: int = 6
    L_list: list[int] = field(default_factory=lambda: [4, 6, 8, 10])
    b: float = 0.0
    distribution: DistributionSpec = field(default_factory=DistributionSpec)
    E: float = 0.0
    E_list: list[float] = field(default_factory=lambda: [0.0, 1.0, 2.0])
    eta: float = 1e-2
    eta_ladder: list[float] = field(default_factory=lambda: list(DEFAULT_ETA_LADDER))
    window: float = DEFAULT_WINDOW
    interval: list[float] = field(default_factory=lambda: [0.4, 0.6])
    epsilon: float = 0.1
    w: float = 1.0
    s: float = 0.2
    s_list: list[float] = field(default_factory=lambda: [0.1, 0.2, 0.3])
    tau_prime: float = 0.125
    N: int = 1
    n_max: int = DEFAULT_N_MAX
    depth: int = 16
    grid_min: float = -4.0
    grid_max: float = 4.0
    grid_points: int = 41
    degree: int = 3
    vertices: int = 2000
    backbone_length: int = 12
    L_cap: int = 10
    realizations: int = 200
    seed: int = 0
    threads: int | None = None
    out_dir: str | None = None
    dense_cap: int = DENSE_CAP
    dump: bool = False

    @property
    def experiment_kind(self) -> Experiment:
        return Experiment(self.experiment)

    def law(self) -> DisorderLaw:
        d = self.distribution
        return law_from_spec(d.type, d.p1, d.p2, d.tau)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def digest(self) -> str:
        """8-hex digest of the canonical JSON echo."""
        payload = json.dumps(self.to_dict(), sort_keys=True, default=str).encode()
        return hashlib.sha1(payload).hexdigest()[:8]


_TOP_KEYS = {f.name for f in fields(ExperimentConfig)} - {DISTRIBUTION_TABLE}
_DISTRIBUTION_KEYS = {f.name for f in fields(DistributionSpec)}
_KEY_PATTERN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=")
_TABLE_PATTERN = re.compile(r"^\s*\[\s*([A-Za-z_][A-Za-z0-9_.]*)\s*\]")


def key_lines(text: str) -> dict[str, int]:
    """Map dotted keys to the 1-based line that assigns them."""
    lines, table = {}, ""
    for number, line in enumerate(text.splitlines(), start=1):
        if m := _TABLE_PATTERN.match(line):
            table = m.group(1)
            lines.setdefault(table, number)
        elif m := _KEY_PATTERN.match(line):
            key = f"{table}.{m.group(1)}" if table else m.group(1)
            lines.setdefault(key, number)
    return lines


def parse_override(item: str) -> tuple[str, Any]:
    """Split ``key=value``; the value is read as a TOML literal, else kept as a string.

    Example:
        >>> parse_override("L_list=[4, 6]")
        ('L_list', [4, 6])
    """
    if "=" not in item:
        raise ConfigError(f"Override must look like key=value, got {item!r}")
    key, raw = (part.strip() for part in item.split("=", 1))
    try:
        value = tomllib.loads(f"v = {raw}")["v"]
    except tomllib.TOMLDecodeError:
        value = raw
    return key, value


def _coerce(name: str, value: Any, default: Any) -> Any:
    if isinstance(default, bool) or value is None:
        return value
    if isinstance(default, float) and isinstance(value, int):
        return float(value)
    if isinstance(default, list) and not isinstance(value, list):
        raise ConfigError(f"Key {name!r} expects a list, got {value!r}")
    return value


def _apply(config: ExperimentConfig, key: str, value: Any, line: int | None, source: str | None) -> None:
    if key.startswith(f"{DISTRIBUTION_TABLE}."):
        sub = key.split(".", 1)[1]
        if sub not in _DISTRIBUTION_KEYS:
            raise ConfigError(f"Unknown distribution key: {sub}", line, source)
        setattr(config.distribution, sub, value)
        return
    if key not in _TOP_KEYS:
        raise ConfigError(f"Unknown config key: {key}", line, source)
    setattr(config, key, _coerce(key, value, getattr(config, key)))


def load_config(path: Path | str | None = None, overrides: list[str] | None = None,
                experiment: str | None = None) -> ExperimentConfig:
    """Read a TOML config, apply ``--set`` overrides and validate.

    Args:
        path: Config file, optional
        overrides: ``key=value`` strings, applied after the file
        experiment: Experiment name from the command line; wins over the file

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigError: On unknown keys or invalid values, naming the file line when known
    """
    config = ExperimentConfig()
    lines: dict[str, int] = {}
    source = None

    if path is not None:
        source = str(path)
        try:
            text = Path(path).read_text()
        except FileNotFoundError:
            raise ConfigError(f"Config file not found: {path}") from None
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"Invalid TOML: {e}", source=source) from None
        lines = key_lines(text)

        for key, value in data.items():
            if key == DISTRIBUTION_TABLE:
                if not isinstance(value, dict):
                    raise ConfigError("distribution must be a table", lines.get(key), source)
                for sub, sub_value in value.items():
                    dotted = f"{DISTRIBUTION_TABLE}.{sub}"
                    _apply(config, dotted, sub_value, lines.get(dotted), source)
            else:
                _apply(config, key, value, lines.get(key), source)

    for item in overrides or []:
        key, value = parse_override(item)
        lines.pop(key, None)
        _apply(config, key, value, None, None)

    if experiment:
        config.experiment = experiment

    validate_config(config, lines, source)
    return config


def validate_config(config: ExperimentConfig, lines: dict[str, int] | None = None,
                    source: str | None = None) -> None:
    """Reject configs no experiment can run."""
    lines = lines or {}

    def fail(message: str, key: str) -> None:
        raise ConfigError(message, lines.get(key), source)

    try:
        kind = Experiment(config.experiment)
    except ValueError:
        fail(f"Unknown experiment: {config.experiment!r}. "
             f"Supported: {', '.join(e.value for e in Experiment)}", "experiment")

    if not isinstance(config.realizations, int) or config.realizations < 1:
        fail(f"realizations must be a positive integer, got {config.realizations!r}", "realizations")
    if config.K < 2:
        fail(f"K must be >= 2, got {config.K}", "K")
    if config.eta <= 0:
        fail(f"eta must be positive, got {config.eta}", "eta")
    if len(config.interval) != 2 or config.interval[0] > config.interval[1]:
        fail(f"interval must be [lo, hi] with lo <= hi, got {config.interval}", "interval")

    try:
        law = config.law()
    except ParameterError as e:
        fail(str(e), "distribution.type")

    if kind is Experiment.FM_DECAY and not all(0 < s < min(law.tau, 1.0) for s in [config.s, *config.s_list]):
        fail(f"Fractional exponents must lie below the law's tau = {law.tau}", "s")
    if kind in (Experiment.SC_BUILD, Experiment.SW_DIAGNOSTIC) and not 0 < config.tau_prime <= min(law.tau, 0.5) / 2:
        fail(f"tau_prime = {config.tau_prime} exceeds min(tau, 1/2)/2 for tau = {law.tau}", "tau_prime")

    for key in DENSE_DEPTH_KEYS.get(kind, ()):
        depths = getattr(config, key)
        deepest = max(depths) if isinstance(depths, list) else depths
        size = regular_tree_size(config.K, deepest)
        if size > config.dense_cap:
            fail(f"T_{deepest} with K={config.K} has {size} vertices, above dense_cap {config.dense_cap}", key)
    if kind is Experiment.RRG_CONTRAST and config.vertices > config.dense_cap:
        fail(f"vertices = {config.vertices} exceeds dense_cap {config.dense_cap}", "vertices")
