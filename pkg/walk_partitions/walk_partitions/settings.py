from __future__ import annotations

import os
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

WALK_SEPARATOR = ","
ZERO_WALK_TEXT = "0"
ENV_PREFIX = "WALK_PARTITIONS_"
# entries per memoized enumeration, reduction and dressing helper
CACHE_SIZE = 4096


class Settings(BaseModel):
    """
    Runtime configuration of the library and the command line tool.
    Attributes:
        rcond_threshold (float): Reciprocal condition estimate below which a matrix
        inversion is reported as singular.
        spectral_radius_warning (float): Spectral radius from which the resolvent
        oracle logs a divergence warning.
        log_level (str): Level name passed to the logging configuration.
        log_format (str): Format string of the log records.
    """

    model_config = ConfigDict(validate_assignment=True)

    rcond_threshold: float = Field(default=1e-12, gt=0)
    spectral_radius_warning: float = Field(default=1.0, gt=0)
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level '{value}'")
        return level

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> Settings:
        """
        Method builds settings from WALK_PARTITIONS_* environment variables. Variables
        that are not set keep the defaults.
        :param environ: Mapping to read from, os.environ by default.
        :return: Validated settings.
        """
        environ = os.environ if environ is None else environ
        values = {}
        for name in ("rcond_threshold", "spectral_radius_warning", "log_level"):
            key = ENV_PREFIX + name.upper()
            if key in environ:
                values[name] = environ[key]
        return cls(**values)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Method returns the process-wide settings, reading the environment on first use.
    :return: Settings instance.
    """
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings
