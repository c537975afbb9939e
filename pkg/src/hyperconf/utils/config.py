"""
Configuration management for the hyperconf toolkit.

Handles loading and accessing configuration from environment variables
and YAML configuration files.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from hyperconf.exceptions.errors import ConfigurationException


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore",
    )

    # Application
    app_env: str = Field(default="development", alias="HYPERCONF_ENV")
    log_level: str = Field(default="INFO", alias="HYPERCONF_LOG_LEVEL")
    log_format: str = Field(default="pretty", alias="HYPERCONF_LOG_FORMAT")
    log_file: Optional[str] = Field(default=None, alias="HYPERCONF_LOG_FILE")

    # Hypergraph core
    max_vertices: int = Field(default=512, ge=2, alias="HYPERCONF_MAX_VERTICES")
    zero_enumeration_max_t: int = Field(default=4, ge=1, alias="HYPERCONF_ZERO_ENUM_MAX_T")
    zero_enumeration_max_n: int = Field(default=64, ge=1, alias="HYPERCONF_ZERO_ENUM_MAX_N")

    # Configuration search
    search_max_nodes: int = Field(default=50_000_000, ge=1, alias="HYPERCONF_SEARCH_MAX_NODES")
    search_max_results: int = Field(default=1_000_000, ge=1, alias="HYPERCONF_SEARCH_MAX_RESULTS")

    # Extremal solver
    solver_node_limit: int = Field(default=20_000_000, ge=1, alias="HYPERCONF_SOLVER_NODE_LIMIT")
    solver_time_limit: float = Field(default=1800.0, gt=0, alias="HYPERCONF_SOLVER_TIME_LIMIT")
    pack_candidate_limit: int = Field(default=200_000, ge=1, alias="HYPERCONF_PACK_CANDIDATE_LIMIT")
    pack_max_attempts: int = Field(default=20_000, ge=1, alias="HYPERCONF_PACK_MAX_ATTEMPTS")

    # Claim sweeps
    grid_r_max: int = Field(default=40, ge=3, alias="HYPERCONF_GRID_R_MAX")
    grid_t_max: int = Field(default=6, ge=2, alias="HYPERCONF_GRID_T_MAX")
    grid_k_max: int = Field(default=12, ge=2, alias="HYPERCONF_GRID_K_MAX")
    ratio_samples: int = Field(default=100_000, ge=1, alias="HYPERCONF_RATIO_SAMPLES")

    # Parallelism
    workers: int = Field(default=1, ge=1, alias="HYPERCONF_WORKERS")


# Global settings instance
_settings: Optional[Settings] = None


def get_config() -> Settings:
    """
    Get the global configuration settings.

    Returns:
        Settings instance with all configuration values

    Example:
        >>> config = get_config()
        >>> print(config.max_vertices)
        512
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def load_config(config_file: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML file.

    Args:
        config_file: Path to YAML configuration file

    Returns:
        Dictionary containing configuration

    Example:
        >>> config = load_config("config/development.yaml")
        >>> print(config["search"]["max_nodes"])
        50000000
    """
    if config_file is None:
        env = os.getenv("HYPERCONF_ENV", "development")
        config_file = f"config/{env}.yaml"

    config_path = Path(config_file)

    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_file}")

    with open(config_path, "r") as f:
        config = yaml.safe_load(f) or {}

    if not isinstance(config, dict):
        raise ConfigurationException(
            f"Configuration file must contain a mapping: {config_file}",
            details={"path": str(config_path)},
        )
    return config


def _flatten(config: Dict[str, Any]) -> Dict[str, Any]:
    # {"search": {"max_nodes": 5}} -> {"search_max_nodes": 5}; bare field names pass through
    flat: Dict[str, Any] = {}
    for section, values in config.items():
        if not isinstance(values, dict):
            flat[section] = values
            continue
        for key, value in values.items():
            if section == "logging":
                flat[key if key.startswith("log_") else f"log_{key}"] = value
            elif f"{section}_{key}" in Settings.model_fields:
                flat[f"{section}_{key}"] = value
            else:
                flat[key] = value
    return flat


def configure(overrides: Optional[Dict[str, Any]] = None) -> Settings:
    """
    Replace the global settings with environment values plus overrides.

    Args:
        overrides: Nested YAML-style mapping or flat field mapping

    Returns:
        The new global Settings instance

    Raises:
        ConfigurationException: If an override has an invalid value
    """
    global _settings
    flat = _flatten(overrides or {})
    known = {k: v for k, v in flat.items() if k in Settings.model_fields}
    try:
        _settings = Settings(**known)
    except ValidationError as e:
        raise ConfigurationException(
            "Invalid configuration values", details={"errors": e.errors()}
        ) from e
    return _settings


def get_setting(key: str, default: Any = None) -> Any:
    """
    Get a specific configuration setting.

    Args:
        key: Settings field name
        default: Default value if key not found

    Returns:
        Configuration value or default
    """
    config = get_config()
    return getattr(config, key, default)
