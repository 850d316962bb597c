"""
Toolkit Configuration
Environment-driven settings; values may come from a .env file loaded by the entry script.
"""

import os
import logging
from pathlib import Path
from typing import Optional

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_MANIFEST = Path(__file__).parent / "configs" / "expected_status.json"


def _read_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def _read_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}")
    if not value > 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


class ToolkitConfig:
    """Configuration for the verification toolkit."""

    def __init__(self):
        self.threads = _read_int("YBX_THREADS", os.cpu_count() or 1)
        self.series_tol = _read_float("YBX_SERIES_TOL", 1e-12)
        self.colored_tol = _read_float("YBX_COLORED_TOL", 1e-9)
        self.digits = _read_int("YBX_DIGITS", 50)
        self.manifest_path = Path(os.getenv("YBX_MANIFEST", str(DEFAULT_MANIFEST)))
        self.log_level = os.getenv("YBX_LOG_LEVEL", "INFO").upper()

    def to_dict(self) -> dict:
        return {
            "threads": self.threads,
            "series_tol": self.series_tol,
            "colored_tol": self.colored_tol,
            "digits": self.digits,
            "manifest_path": str(self.manifest_path),
            "log_level": self.log_level,
        }


_config: Optional[ToolkitConfig] = None


def get_config() -> ToolkitConfig:
    """Return the process-wide configuration, building it on first use."""
    global _config
    if _config is None:
        _config = ToolkitConfig()
        logger.debug(f"🔧 Loaded configuration: {_config.to_dict()}")
    return _config


def reload_config() -> ToolkitConfig:
    global _config
    _config = None
    return get_config()
