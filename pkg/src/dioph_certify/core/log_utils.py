"""
Logging set-up for the command-line tool.

Library modules only create loggers; handlers are installed here, once, by the
CLI entry point.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union

logger = logging.getLogger(__name__)

PACKAGE_LOGGER_NAME = "dioph_certify"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_HANDLER_MARK = "_dioph_certify_handler"


def _level_from(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.upper())
    if not isinstance(resolved, int):
        raise ValueError(f"Unknown log level: {level}")
    return resolved


def configure_logging(
    level: Union[int, str] = logging.WARNING, log_file: Optional[Union[str, Path]] = None
) -> logging.Logger:
    """
    Install handlers on the package logger.

    Calling this again replaces the handlers installed by the previous call.

    Args:
        level: Level name or number for the package logger
        log_file: Optional path of a file that receives the same records

    Returns:
        The package logger
    """
    package_logger = logging.getLogger(PACKAGE_LOGGER_NAME)
    for handler in list(package_logger.handlers):
        if getattr(handler, _HANDLER_MARK, False):
            package_logger.removeHandler(handler)
            handler.close()

    numeric_level = _level_from(level)
    package_logger.setLevel(numeric_level)
    formatter = logging.Formatter(LOG_FORMAT)

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file is not None:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path, encoding="utf-8"))

    for handler in handlers:
        handler.setLevel(numeric_level)
        handler.setFormatter(formatter)
        setattr(handler, _HANDLER_MARK, True)
        package_logger.addHandler(handler)

    logger.debug(f"Logging configured at {logging.getLevelName(numeric_level)}")
    return package_logger


def get_current_log_file_path() -> Optional[str]:
    """Log file installed by ``configure_logging``, or None when logging only goes to stderr."""
    for handler in logging.getLogger(PACKAGE_LOGGER_NAME).handlers:
        if isinstance(handler, logging.FileHandler) and getattr(handler, _HANDLER_MARK, False):
            return handler.baseFilename
    return None
