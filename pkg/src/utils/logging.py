"""Shared logging configuration for taxicab-forge"""
import logging
import sys
from typing import Optional

from src.config.constants import LOGGER_ROOT

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logger(name: str = LOGGER_ROOT, level: str = "WARNING", log_file: Optional[str] = None) -> logging.Logger:
    """
    Setup a logger writing to standard error.

    Standard output is reserved for results, so the console handler
    always targets stderr.

    Args:
        name: Logger name
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file path

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    log_level = getattr(logging, level.upper(), logging.WARNING)
    logger.setLevel(log_level)

    # Avoid duplicate handlers, but honour a new level
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(log_level)
        return logger

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(module: str) -> logging.Logger:
    """Child logger of the package root, e.g. taxicab_forge.oracle."""
    return logging.getLogger(f"{LOGGER_ROOT}.{module}")


# Default logger
logger = logging.getLogger(LOGGER_ROOT)
