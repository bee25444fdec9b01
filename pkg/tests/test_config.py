"""Tests for loading and validating the YAML configuration."""

from __future__ import annotations

from pathlib import Path

import pytest

from igv.config import CONFIG_ENV_VAR, ConfigError, ToolkitConfig, config_from_mapping, load_config


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "igv.yaml"
    path.write_text(text, encoding="utf-8")
    return path


def test_defaults_without_file() -> None:
    config = load_config(env={})

    assert config == ToolkitConfig()
    assert config.numeric.tolerance == 1e-9
    assert config.enumeration.exhaustive_limit == 4
    assert dict(config.census.samples) == {5: 20_000, 6: 10_000}
    assert config.experiments.pairwise_range == (0.0, 1.2)


def test_file_overrides_some_keys(tmp_path: Path) -> None:
    path = _write(
        tmp_path,
        "numeric:\n  tolerance: 1.0e-6\n"
        "census:\n  samples: {5: 500}\n"
        "experiments:\n  ed_range: [0.25, 2]\n"
        "logging:\n  level: debug\n",
    )
    config = load_config(path)

    assert config.numeric.tolerance == 1e-6
    assert config.numeric.float_digits == 12
    assert dict(config.census.samples) == {5: 500}
    assert config.experiments.ed_range == (0.25, 2.0)
    assert config.logging.level == "debug"


def test_environment_variable_names_the_file(tmp_path: Path) -> None:
    path = _write(tmp_path, "monte_carlo:\n  workers: 3\n")
    assert load_config(env={CONFIG_ENV_VAR: str(path)}).monte_carlo.workers == 3


def test_explicit_path_wins_over_environment(tmp_path: Path) -> None:
    path = _write(tmp_path, "runs:\n  record: false\n")
    config = load_config(path, env={CONFIG_ENV_VAR: str(tmp_path / "missing.yaml")})
    assert config.runs.record is False


def test_empty_file_gives_defaults(tmp_path: Path) -> None:
    assert load_config(_write(tmp_path, "")) == ToolkitConfig()


@pytest.mark.parametrize(
    "raw",
    [
        {"plotting": {}},
        {"numeric": {"epsilon": 1}},
        {"numeric": {"tolerance": "small"}},
        {"numeric": {"tolerance": 0}},
        {"enumeration": {"exhaustive_limit": 0}},
        {"enumeration": {"exhaustive_limit": True}},
        {"experiments": {"pairwise_range": [1.0, 0.5]}},
        {"census": {"samples": {5: -1}}},
        {"census": {"samples": [5]}},
        {"runs": {"record": "yes"}},
        {"logging": {"level": "LOUD"}},
        {"monte_carlo": 4},
    ],
)
def test_invalid_values_are_rejected(raw: dict) -> None:
    with pytest.raises(ConfigError) as excinfo:
        config_from_mapping(raw)
    assert excinfo.value.code == "invalid_config"


def test_non_mapping_root_is_rejected(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        load_config(_write(tmp_path, "- numeric\n"))


def test_missing_file_is_config_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.yaml")


def test_invalid_yaml_is_config_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        load_config(_write(tmp_path, "numeric: [1, 2\n"))
