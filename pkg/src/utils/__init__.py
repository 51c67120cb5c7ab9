"""Utility functions for taxicab-forge"""

from src.utils.error_handlers import exit_code_for, handle_cli_errors
from src.utils.logging import get_logger, logger, setup_logger

__all__ = [
    "logger",
    "get_logger",
    "setup_logger",
    "handle_cli_errors",
    "exit_code_for",
]
