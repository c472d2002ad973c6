"""
Utilities Package

Configuration, error types, logging and observability helpers.
"""

from .config import DEFAULT_GUARDS, Guards, default_jobs, default_log_dir, default_log_level, tracing_enabled
from .errors import (
    DegeneratePolytopeError,
    DimensionMismatchError,
    EmptyRegionError,
    FieldError,
    GuardExceededError,
    InputError,
    InternalInvariantError,
    NotFullDimensionalError,
    OutputError,
    ToricCodeError,
    UnboundedRegionError,
)
from .logging_config import LOG_LEVELS, setup_logging

__all__ = [
    "DEFAULT_GUARDS",
    "DegeneratePolytopeError",
    "DimensionMismatchError",
    "EmptyRegionError",
    "FieldError",
    "GuardExceededError",
    "Guards",
    "InputError",
    "InternalInvariantError",
    "LOG_LEVELS",
    "NotFullDimensionalError",
    "OutputError",
    "ToricCodeError",
    "UnboundedRegionError",
    "default_jobs",
    "default_log_dir",
    "default_log_level",
    "setup_logging",
    "tracing_enabled",
]
