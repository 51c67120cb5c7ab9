"""
Configuration management for taxicab-forge.
Reads the environment (and an optional .env file) into dataclass sections.
"""
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from src.config.constants import (
    DEFAULT_CLEAR_CAP,
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_FORMAT,
    ERROR_INVALID_CLEAR_CAP,
    ERROR_INVALID_ENV_INTEGER,
    ERROR_INVALID_FORMAT,
    ERROR_INVALID_LOG_LEVEL,
    ERROR_INVALID_WORKERS,
    LOG_LEVELS,
    OUTPUT_FORMATS,
)

# Load environment variables
load_dotenv()


@dataclass
class OracleConfig:
    """Configuration for the brute-force search oracle"""
    workers: int = 1
    chunks_per_worker: int = 4
    workers_from_env: bool = False


@dataclass
class FamilyConfig:
    """Configuration for family generation"""
    clear_cap: int = DEFAULT_CLEAR_CAP


@dataclass
class OutputConfig:
    """Configuration for CLI output"""
    default_format: str = DEFAULT_OUTPUT_FORMAT


@dataclass
class LoggingConfig:
    """Configuration for logging"""
    level: str = DEFAULT_LOG_LEVEL
    log_file: Optional[str] = None


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(ERROR_INVALID_ENV_INTEGER.format(name=name, value=raw)) from None


class Config:
    """Main configuration class"""

    def __init__(self):
        # Oracle Configuration
        self.oracle = OracleConfig(
            workers=_env_int("TAXICAB_FORGE_WORKERS", 1),
            chunks_per_worker=_env_int("TAXICAB_FORGE_CHUNKS_PER_WORKER", 4),
            workers_from_env=bool(os.getenv("TAXICAB_FORGE_WORKERS", "").strip()),
        )

        # Family Configuration
        self.family = FamilyConfig(
            clear_cap=_env_int("TAXICAB_FORGE_CLEAR_CAP", DEFAULT_CLEAR_CAP),
        )

        # Output Configuration
        self.output = OutputConfig(
            default_format=os.getenv("TAXICAB_FORGE_FORMAT", DEFAULT_OUTPUT_FORMAT).lower(),
        )

        # Logging Configuration
        self.logging = LoggingConfig(
            level=os.getenv("TAXICAB_FORGE_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
            log_file=os.getenv("TAXICAB_FORGE_LOG_FILE") or None,
        )

    def resolve_workers(self, requested: int) -> int:
        """Worker count for a search: the environment overrides the flag."""
        if self.oracle.workers_from_env:
            return self.oracle.workers
        return requested

    def validate(self) -> tuple:
        """Validate configuration"""
        if self.oracle.workers < 1:
            return False, ERROR_INVALID_WORKERS.format(value=self.oracle.workers)
        if self.oracle.chunks_per_worker < 1:
            return False, f"TAXICAB_FORGE_CHUNKS_PER_WORKER must be at least 1, got {self.oracle.chunks_per_worker}"
        if self.family.clear_cap < 1:
            return False, ERROR_INVALID_CLEAR_CAP.format(value=self.family.clear_cap)
        if self.output.default_format not in OUTPUT_FORMATS:
            return False, ERROR_INVALID_FORMAT.format(choices=", ".join(OUTPUT_FORMATS), value=self.output.default_format)
        if self.logging.level not in LOG_LEVELS:
            return False, ERROR_INVALID_LOG_LEVEL.format(choices=", ".join(LOG_LEVELS), value=self.logging.level)
        return True, None


def get_config() -> Config:
    """Build a configuration from the current environment."""
    return Config()


# Global configuration instance
config = Config()
