"""Runtime configuration.

Configuration is an optional YAML file. It is looked up from ``--config``,
then the ``IGV_CONFIG`` environment variable; without either the built-in
defaults apply. Every key is optional, but unknown keys and ill-typed values
are rejected.

Example::

    numeric:
      tolerance: 1.0e-9
    census:
      samples: {5: 20000, 6: 10000}
    monte_carlo:
      workers: 4
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Mapping

import yaml

from igv.backend.domain.errors import GameError

CONFIG_ENV_VAR = "IGV_CONFIG"


class ConfigError(GameError):
    default_code = "invalid_config"


@dataclass(frozen=True)
class NumericConfig:
    tolerance: float = 1e-9
    float_digits: int = 12


@dataclass(frozen=True)
class EnumerationConfig:
    exhaustive_limit: int = 4


@dataclass(frozen=True)
class ExperimentsConfig:
    games_per_system: int = 100
    pilot_systems: int = 30
    cochran_z: float = 1.96
    cochran_e: float = 0.01
    pairwise_range: tuple[float, float] = (0.0, 1.2)
    ed_range: tuple[float, float] = (0.5, 1.7)
    bin_width: float = 0.1


@dataclass(frozen=True)
class CensusConfig:
    samples: Mapping[int, int] = field(default_factory=lambda: {5: 20_000, 6: 10_000})


@dataclass(frozen=True)
class MonteCarloConfig:
    batch_size: int = 10_000
    workers: int = 1


@dataclass(frozen=True)
class RunsConfig:
    record: bool = True


@dataclass(frozen=True)
class LoggingConfig:
    level: str = "INFO"


@dataclass(frozen=True)
class ToolkitConfig:
    numeric: NumericConfig = field(default_factory=NumericConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    experiments: ExperimentsConfig = field(default_factory=ExperimentsConfig)
    census: CensusConfig = field(default_factory=CensusConfig)
    monte_carlo: MonteCarloConfig = field(default_factory=MonteCarloConfig)
    runs: RunsConfig = field(default_factory=RunsConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


def _coerce(default: Any, value: Any, label: str) -> Any:
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"{label} must be true or false")
        return value
    if isinstance(default, int):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ConfigError(f"{label} must be a positive integer")
        return value
    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{label} must be a number")
        return float(value)
    if isinstance(default, str):
        if not isinstance(value, str):
            raise ConfigError(f"{label} must be a string")
        return value
    if isinstance(default, tuple):
        if (
            not isinstance(value, (list, tuple))
            or len(value) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
            or value[0] >= value[1]
        ):
            raise ConfigError(f"{label} must be an increasing pair of numbers")
        return (float(value[0]), float(value[1]))
    if isinstance(default, Mapping):
        if not isinstance(value, Mapping):
            raise ConfigError(f"{label} must be a mapping")
        return {
            _coerce(1, key, f"{label} key"): _coerce(1, count, f"{label}[{key}]")
            for key, count in value.items()
        }
    raise ConfigError(f"{label} has an unsupported type")


def _build_section(section_type: type, raw: Any, name: str) -> Any:
    defaults = section_type()
    if raw is None:
        return defaults
    if not isinstance(raw, Mapping):
        raise ConfigError(f"section '{name}' must be a mapping")
    known = {f.name for f in fields(section_type)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"unknown key(s) in '{name}': {', '.join(map(str, unknown))}")
    values = {key: _coerce(getattr(defaults, key), raw[key], f"{name}.{key}") for key in raw}
    return replace(defaults, **values)


def config_from_mapping(raw: Mapping[str, Any] | None) -> ToolkitConfig:
    if raw is None:
        return ToolkitConfig()
    if not isinstance(raw, Mapping):
        raise ConfigError("configuration root must be a mapping")
    sections = {f.name: f for f in fields(ToolkitConfig)}
    unknown = sorted(set(raw) - set(sections))
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(map(str, unknown))}")
    defaults = ToolkitConfig()
    built = {
        name: _build_section(type(getattr(defaults, name)), raw[name], name) for name in raw
    }
    config = replace(defaults, **built)
    level = config.logging.level.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"logging.level: unknown level {config.logging.level!r}")
    if config.numeric.tolerance <= 0:
        raise ConfigError("numeric.tolerance must be positive")
    return config


def load_config(
    path: Path | str | None = None, *, env: Mapping[str, str] | None = None
) -> ToolkitConfig:
    """Load the configuration file, or the defaults when none is named.

    Raises:
        ConfigError: If the file cannot be read or does not validate.
    """

    environment = os.environ if env is None else env
    resolved = path or environment.get(CONFIG_ENV_VAR)
    if not resolved:
        return ToolkitConfig()
    config_path = Path(resolved)
    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read configuration {config_path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"invalid YAML in {config_path}: {exc}") from exc
    return config_from_mapping(raw)
