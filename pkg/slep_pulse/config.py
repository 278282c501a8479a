"""Application configuration with YAML / flat key=value + env vars + CLI override support."""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

from slep_pulse.domain.exceptions import ConfigError, UnknownKey
from slep_pulse.domain.params import validate, validate_regime
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime

logger = logging.getLogger(__name__)


@dataclass
class ModelConfig:
    alpha: float | None = None
    beta: float | None = None
    gamma: float | None = None
    D: float | None = None
    epsilon: float | None = None


@dataclass
class RegimeConfig:
    kind: str = "order_eps_minus2"  # order1 | order_eps_minus2
    tau: float | None = None
    theta: float | None = None
    tau_hat: float | None = None
    theta_hat: float | None = None


@dataclass
class PulseConfig:
    half_width: float = 1.5
    points: int | None = None


@dataclass
class DiagramConfig:
    psi_count: int = 181
    psi_margin: float = 0.01
    region_grid: int = 21  # 0 disables the shaded grid
    tau_max: float = 16.0
    theta_max: float = 8.0


@dataclass
class TraceConfig:
    psi: float = math.pi / 4.0
    s_min: float | None = None
    s_max: float | None = None
    samples: int = 400


@dataclass
class SimulationConfig:
    half_width: float = 7.0
    dx: float = 7.0 * 2.0**-10
    dt: float | None = None  # None = clock default
    t_end: float | None = None
    clock: str | None = None  # fast | slow; None = slow for the slow regime
    record_every: int = 10
    initial: str = "perturbed"  # asymptotic | perturbed | file
    perturbation_amplitude: float = 1e-3
    perturbation_mode: str = "antisymmetric"  # symmetric | antisymmetric
    initial_file: str | None = None
    snapshots: bool = False


@dataclass
class SpectrumConfig:
    xi_max: float = 1e3
    samples: int = 2000
    full_xi: bool = False
    discrete: bool = False
    n_grid: int = 4096
    n_eigs: int = 6
    target_re: float = 0.0
    target_im: float = 0.0


@dataclass
class SweepConfig:
    points: list[list[float]] = field(default_factory=list)
    mode: str = "classify"  # classify | simulate


@dataclass
class RunConfig:
    out: str = "./out"
    threads: int = 1
    seed: int = 0
    verbose: bool = False


@dataclass
class AppConfig:
    model: ModelConfig = field(default_factory=ModelConfig)
    regime: RegimeConfig = field(default_factory=RegimeConfig)
    pulse: PulseConfig = field(default_factory=PulseConfig)
    diagram: DiagramConfig = field(default_factory=DiagramConfig)
    trace: TraceConfig = field(default_factory=TraceConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    spectrum: SpectrumConfig = field(default_factory=SpectrumConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    run: RunConfig = field(default_factory=RunConfig)

    def as_dict(self) -> dict[str, dict[str, Any]]:
        return {
            f.name: {g.name: getattr(getattr(self, f.name), g.name) for g in fields(getattr(self, f.name))}
            for f in fields(self)
        }


# Mapping: env var name -> (section, field)
_ENV_MAPPING: dict[str, tuple[str, str]] = {
    "SLEPPULSE_ALPHA": ("model", "alpha"),
    "SLEPPULSE_BETA": ("model", "beta"),
    "SLEPPULSE_GAMMA": ("model", "gamma"),
    "SLEPPULSE_D": ("model", "D"),
    "SLEPPULSE_EPSILON": ("model", "epsilon"),
    "SLEPPULSE_REGIME": ("regime", "kind"),
    "SLEPPULSE_TAU": ("regime", "tau"),
    "SLEPPULSE_THETA": ("regime", "theta"),
    "SLEPPULSE_TAU_HAT": ("regime", "tau_hat"),
    "SLEPPULSE_THETA_HAT": ("regime", "theta_hat"),
    "SLEPPULSE_PSI": ("trace", "psi"),
    "SLEPPULSE_OUT": ("run", "out"),
    "SLEPPULSE_THREADS": ("run", "threads"),
    "SLEPPULSE_SEED": ("run", "seed"),
    "SLEPPULSE_VERBOSE": ("run", "verbose"),
}

# Bare keys of the flat format -> (section, field)
_FLAT_KEYS: dict[str, tuple[str, str]] = {
    "alpha": ("model", "alpha"),
    "beta": ("model", "beta"),
    "gamma": ("model", "gamma"),
    "D": ("model", "D"),
    "epsilon": ("model", "epsilon"),
    "regime": ("regime", "kind"),
    "tau": ("regime", "tau"),
    "theta": ("regime", "theta"),
    "tau_hat": ("regime", "tau_hat"),
    "theta_hat": ("regime", "theta_hat"),
}

YAML_SUFFIXES = (".yml", ".yaml")


def load_config(
    config_path: str | None = None,
    cli_overrides: dict[str, Any] | None = None,
) -> AppConfig:
    """Load configuration with priority: file < env vars < CLI overrides.

    Args:
        config_path: YAML (``.yml``/``.yaml``) or flat key=value file. None to skip.
        cli_overrides: Dict of CLI overrides in format {"section.field": value}.
            None values are skipped (means CLI option was not provided).

    Raises:
        ConfigError: unknown section or key, or a value of the wrong type.
    """
    config = AppConfig()

    # 1. Load from file
    if config_path:
        path = Path(config_path)
        if not path.is_file():
            logger.warning("Config file not found: %s, using defaults", config_path)
        elif path.suffix.lower() in YAML_SUFFIXES:
            _apply_yaml(config, path)
        else:
            _apply_flat(config, path)

    # 2. Apply env vars
    _apply_env_vars(config)

    # 3. Apply CLI overrides
    if cli_overrides:
        _apply_overrides(config, cli_overrides)

    return config


def _apply_yaml(config: AppConfig, path: Path) -> None:
    """Load YAML file and apply values to config."""
    import yaml

    with open(path, encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as exc:
            raise ConfigError(f"Invalid YAML in {path}: {exc}") from exc

    if data is None:
        return
    if not isinstance(data, dict):
        raise ConfigError(f"Config file is not a YAML mapping: {path}")

    for section_name, section_data in data.items():
        section = _section(config, section_name)
        if not isinstance(section_data, dict):
            raise ConfigError(f"Config section '{section_name}' must be a mapping")
        _set_section_fields(section, section_data, prefix=section_name)

    logger.info("Loaded config from %s", path)


def parse_flat(text: str) -> dict[str, str]:
    """key=value lines; '#' starts a comment, blank lines are skipped."""
    entries: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {number}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        entries[key] = value
    return entries


def _apply_flat(config: AppConfig, path: Path) -> None:
    for key, value in parse_flat(path.read_text(encoding="utf-8")).items():
        if key in _FLAT_KEYS:
            section_name, field_name = _FLAT_KEYS[key]
        elif "." in key:
            section_name, field_name = key.split(".", 1)
        else:
            raise UnknownKey(key)
        _set_field_value(_section(config, section_name), field_name, value, key)
    logger.info("Loaded config from %s", path)


def _apply_env_vars(config: AppConfig) -> None:
    """Apply environment variables to config."""
    for env_name, (section_name, field_name) in _ENV_MAPPING.items():
        value = os.environ.get(env_name)
        if value is None:
            continue
        _set_field_value(getattr(config, section_name), field_name, value, env_name)


def _apply_overrides(config: AppConfig, overrides: dict[str, Any]) -> None:
    """Apply CLI overrides in format {'section.field': value}."""
    for key, value in overrides.items():
        if value is None:
            continue
        section_name, _, field_name = key.partition(".")
        _set_field_value(_section(config, section_name), field_name, value, key)


def _section(config: AppConfig, name: str) -> Any:
    if name not in {f.name for f in fields(config)}:
        raise UnknownKey(name)
    return getattr(config, name)


def _set_section_fields(section: Any, data: dict[str, Any], prefix: str) -> None:
    """Set fields on a section dataclass from a dict."""
    for key, value in data.items():
        if value is not None:
            _set_field_value(section, key, value, f"{prefix}.{key}")


def _set_field_value(obj: Any, field_name: str, value: Any, label: str) -> None:
    """Set a field on a dataclass, coercing the value to the correct type."""
    field_info = {f.name: f for f in fields(obj)}.get(field_name)
    if field_info is None:
        raise UnknownKey(label)
    try:
        coerced = _coerce_value(value, field_info.type)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"Invalid value for '{label}': {value!r}") from exc
    object.__setattr__(obj, field_name, coerced)


def _coerce_value(value: Any, type_hint: str | type | None) -> Any:
    """Coerce a value to match the target type hint."""
    if value is None:
        return None

    type_str = str(type_hint) if type_hint else ""
    optional = "None" in type_str
    if optional and isinstance(value, str) and value.strip().lower() in ("", "none", "null"):
        return None

    if "bool" in type_str:
        if isinstance(value, bool):
            return value
        if isinstance(value, str):
            return value.strip().lower() in ("true", "1", "yes")
        return bool(value)

    if "list" in type_str:
        return parse_points(value)

    if "int" in type_str:
        if isinstance(value, float) and not value.is_integer():
            raise ValueError(f"{value} is not an integer")
        return int(value)

    if "float" in type_str:
        if isinstance(value, bool):
            raise TypeError("boolean where a number is expected")
        return float(value)

    return str(value)


def parse_points(value: Any) -> list[list[float]]:
    """Point list from YAML pairs or the flat form '3,2; 13,0.5'."""
    if isinstance(value, str):
        chunks = [c for c in value.replace("\n", ";").split(";") if c.strip()]
        value = [c.split(",") for c in chunks]
    points = []
    for item in value:
        pair = [float(v) for v in item]
        if len(pair) != 2:
            raise ValueError(f"point {item!r} needs exactly two coordinates")
        points.append(pair)
    return points


def model_params(config: AppConfig) -> ModelParams:
    """Validated ModelParams from the model section."""
    return validate({f.name: getattr(config.model, f.name) for f in fields(config.model)})


def time_scale_regime(config: AppConfig) -> TimeScaleRegime:
    r = config.regime
    return validate_regime(
        {"regime": r.kind, "tau": r.tau, "theta": r.theta, "tau_hat": r.tau_hat, "theta_hat": r.theta_hat}
    )
