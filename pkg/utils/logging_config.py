"""
Logging Configuration

One named logger tree ("toric_codes") for the library and the CLI. stdout
carries command results, so every handler here writes to stderr or a file.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, TextIO

LOGGER_NAME = "toric_codes"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def resolve_level(name: str) -> int:
    """Map a level name (any case) to its logging constant."""
    key = name.strip().upper()
    if key not in LOG_LEVELS:
        raise ValueError(f"unknown log level '{name}', expected one of {', '.join(LOG_LEVELS)}")
    return getattr(logging, key)


def _handler(handler: logging.Handler, level: int) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATE_FORMAT))
    return handler


def log_file_path(log_dir: str, command: str = "run") -> Path:
    """Timestamped file for one CLI invocation, e.g. logs/distance_20240101_120000.log"""
    stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return Path(log_dir) / f"{command.replace('-', '_')}_{stamp}.log"


def setup_logging(
    log_level: str = "WARNING",
    log_to_file: bool = False,
    log_dir: str = "logs",
    command: str = "run",
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    """
    Configure the toric_codes logger.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        log_to_file: Also write to a timestamped file under log_dir
        log_dir: Directory for log files, created on demand
        command: CLI command name used in the log file name
        stream: Console stream, stderr when omitted

    Returns:
        The configured logger; previous handlers are replaced
    """
    level = resolve_level(log_level)
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.handlers = [_handler(logging.StreamHandler(stream or sys.stderr), level)]

    if log_to_file:
        path = log_file_path(log_dir, command)
        path.parent.mkdir(parents=True, exist_ok=True)
        logger.addHandler(_handler(logging.FileHandler(path), level))
        logger.info(f"Logging to file: {path}")

    logger.debug(f"Logging initialized at {logging.getLevelName(level)} level")
    return logger
