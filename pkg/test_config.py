#!/usr/bin/env python3
"""
Tests for environment-driven configuration.
"""

import pytest

from ybx.config import DEFAULT_MANIFEST, get_config, reload_config
from ybx.errors import ConfigError

ENV_VARS = ("YBX_THREADS", "YBX_SERIES_TOL", "YBX_COLORED_TOL", "YBX_DIGITS", "YBX_MANIFEST", "YBX_LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    yield
    monkeypatch.undo()
    reload_config()


def test_defaults():
    config = reload_config()
    assert config.threads >= 1
    assert config.series_tol == 1e-12
    assert config.colored_tol == 1e-9
    assert config.digits == 50
    assert config.manifest_path == DEFAULT_MANIFEST
    assert config.log_level == "INFO"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("YBX_THREADS", "3")
    monkeypatch.setenv("YBX_DIGITS", "80")
    monkeypatch.setenv("YBX_COLORED_TOL", "1e-7")
    monkeypatch.setenv("YBX_LOG_LEVEL", "debug")
    config = reload_config()
    assert config.threads == 3
    assert config.digits == 80
    assert config.colored_tol == 1e-7
    assert config.to_dict()["log_level"] == "DEBUG"


def test_get_config_is_cached(monkeypatch):
    first = reload_config()
    monkeypatch.setenv("YBX_THREADS", "7")
    assert get_config() is first
    assert reload_config().threads == 7


def test_blank_values_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv("YBX_DIGITS", "  ")
    assert reload_config().digits == 50


@pytest.mark.parametrize("name,value", [
    ("YBX_THREADS", "many"),
    ("YBX_THREADS", "0"),
    ("YBX_SERIES_TOL", "tiny"),
    ("YBX_COLORED_TOL", "-1"),
])
def test_invalid_values_raise(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        reload_config()


def main():
    print("🧪 Running configuration tests...")
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
