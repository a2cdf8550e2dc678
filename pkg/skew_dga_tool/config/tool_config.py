"""
Configuration management for the skew DGA tool.

Computation defaults come from a JSON file and SKEW_DGA_* environment
variables (optionally read from a .env file); command line flags and the
bounds line of a ring spec take precedence over both.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from skew_dga_tool.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

ENV_OVERRIDES = {
    "SKEW_DGA_HDEG": "default_hdeg",
    "SKEW_DGA_IDEG": "default_ideg",
    "SKEW_DGA_REPORT_TIMING": "report_timing",
    "SKEW_DGA_LOG_LEVEL": "log_level",
}


class ComputationConfig(BaseModel):
    """Defaults for truncated computations."""

    default_hdeg: int = Field(4, ge=0, le=64, description="Homological bound N when none is given")
    default_ideg: int = Field(8, ge=0, le=256, description="Internal degree bound D when none is given")
    report_timing: bool = Field(True, description="Whether reports carry the elapsed time")
    log_level: str = Field("WARNING", description="Logging level of the command line tool")
    shuffle_rounds: int = Field(3, ge=1, le=50, description="Randomized re-runs of property checks")
    max_stratum_size: int = Field(20000, ge=1, description="Largest stratum a computation may build")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        """Validate that log_level names a logging level."""
        level = str(v).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level


class ToolConfiguration:
    """Loads and validates the tool configuration."""

    def __init__(self, config_file: Optional[str] = None, env_file: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_file: Path to a JSON configuration file (optional)
            env_file: Path to a .env file; the default search applies when absent

        Raises:
            ConfigurationError: If the file cannot be read or a value is invalid
        """
        self.config_file = Path(config_file) if config_file else None
        if env_file:
            load_dotenv(env_file, override=False)
        else:
            load_dotenv(override=False)
        self._config_data = self._load_configuration()
        self._config_data.update(self._environment_overrides())
        self.config = self.get_config()

    def _load_configuration(self) -> Dict[str, Any]:
        """Load settings from the JSON file, if one was given."""
        if self.config_file is None:
            return {}
        if not self.config_file.exists():
            raise ConfigurationError(f"configuration file {self.config_file} does not exist",
                                     config_key="config_file")
        try:
            with open(self.config_file, "r") as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            raise ConfigurationError(f"Failed to load configuration from {self.config_file}: {e}",
                                     config_key="config_file")
        if not isinstance(data, dict):
            raise ConfigurationError("configuration file must hold a JSON object",
                                     config_key="config_file")
        unknown = sorted(set(data) - set(ComputationConfig.model_fields))
        if unknown:
            raise ConfigurationError(f"unknown configuration keys: {', '.join(unknown)}",
                                     config_key=unknown[0])
        logger.debug(f"loaded configuration from {self.config_file}")
        return data

    @staticmethod
    def _environment_overrides() -> Dict[str, Any]:
        overrides = {}
        for variable, key in ENV_OVERRIDES.items():
            value = os.getenv(variable, "").strip()
            if value:
                overrides[key] = value
        return overrides

    def get_config(self, **overrides) -> ComputationConfig:
        """
        Get the validated configuration.

        Args:
            **overrides: Values taking precedence over file and environment

        Returns:
            ComputationConfig instance
        """
        config_data = {**self._config_data, **{k: v for k, v in overrides.items() if v is not None}}
        try:
            return ComputationConfig(**config_data)
        except ValidationError as e:
            key = str(e.errors()[0]["loc"][0]) if e.errors() else None
            raise ConfigurationError(f"Invalid configuration: {e}", config_key=key)

    def resolve_bounds(self, hdeg: Optional[int] = None, ideg: Optional[int] = None,
                       spec_hdeg: Optional[int] = None,
                       spec_ideg: Optional[int] = None) -> Dict[str, int]:
        """Bounds by precedence: explicit flag, then spec bounds, then configured default."""
        return {
            "hdeg": next(v for v in (hdeg, spec_hdeg, self.config.default_hdeg) if v is not None),
            "ideg": next(v for v in (ideg, spec_ideg, self.config.default_ideg) if v is not None),
        }
