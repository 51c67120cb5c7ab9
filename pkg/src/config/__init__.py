"""Configuration module for taxicab-forge"""

from src.config.settings import Config, config, get_config

__all__ = ["Config", "config", "get_config"]
