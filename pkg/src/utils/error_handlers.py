"""Common error handling utilities for CLI commands"""
import sys
from functools import wraps
from typing import Any, Callable

import click

from src.config.constants import (
    EXIT_INSUFFICIENT_BOUND,
    EXIT_INTERNAL_ERROR,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION,
)
from src.core.exceptions import (
    InconsistencyError,
    InsufficientBoundError,
    ParseError,
    PreconditionError,
)
from src.utils.logging import logger


def exit_code_for(error: BaseException) -> int:
    """
    Map an exception to the CLI exit code.

    Args:
        error: The exception raised by a command

    Returns:
        Process exit code
    """
    if isinstance(error, ParseError):
        return EXIT_PARSE_ERROR
    if isinstance(error, InsufficientBoundError):
        return EXIT_INSUFFICIENT_BOUND
    if isinstance(error, PreconditionError):
        return EXIT_PRECONDITION
    return EXIT_INTERNAL_ERROR


def handle_cli_errors(log_error: bool = True) -> Callable:
    """
    Decorator to turn engine exceptions into exit codes.

    Domain errors print their message verbatim on stderr; anything else is
    logged with its traceback and exits with the internal-error code.

    Args:
        log_error: Whether to log unexpected errors

    Example:
        @cli.command()
        @handle_cli_errors()
        def family(name):
            ...
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except (ParseError, PreconditionError, InsufficientBoundError) as e:
                click.echo(f"✗ {e}", err=True)
                sys.exit(exit_code_for(e))
            except InconsistencyError as e:
                if log_error:
                    logger.error(f"Internal inconsistency in {func.__name__}: {e}", exc_info=True)
                click.echo(f"✗ internal inconsistency: {e}", err=True)
                sys.exit(EXIT_INTERNAL_ERROR)
            except (click.exceptions.Exit, click.ClickException, SystemExit):
                raise
            except Exception as e:
                if log_error:
                    logger.error(f"Error in {func.__name__}: {e}", exc_info=True)
                click.echo(f"✗ unexpected error: {e}", err=True)
                sys.exit(EXIT_INTERNAL_ERROR)
        return wrapper
    return decorator
