"""
Configuration

Size guards and runtime settings. Defaults come from the environment (a .env
file at the project root is loaded first); command-line flags override them.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, PositiveInt

# Determine project root
project_root = Path(__file__).parent.parent

# Load environment variables
load_dotenv(dotenv_path=project_root / ".env")


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


class Guards(BaseModel):
    """Operational limits that route oversized work to an error (exit 3)."""

    max_field: PositiveInt = Field(default_factory=lambda: _env_int("TORIC_MAX_FIELD", 256))
    max_torus: PositiveInt = Field(default_factory=lambda: _env_int("TORIC_MAX_TORUS", 1_000_000))
    max_box: PositiveInt = Field(default_factory=lambda: _env_int("TORIC_MAX_BOX", 10_000_000))
    message_limit: PositiveInt = Field(default_factory=lambda: _env_int("TORIC_MESSAGE_LIMIT", 10**8))
    box_search_limit: PositiveInt = Field(default_factory=lambda: _env_int("TORIC_BOX_SEARCH_LIMIT", 100_000))
    max_dim: PositiveInt = Field(default_factory=lambda: _env_int("TORIC_MAX_DIM", 4))

    model_config = {"frozen": True}


def default_jobs() -> int:
    """Worker count for the exhaustive search."""
    return _env_int("TORIC_JOBS", os.cpu_count() or 1)


def default_log_level() -> str:
    return os.getenv("TORIC_LOG_LEVEL", "WARNING")


def default_log_dir() -> Optional[str]:
    """Directory for per-run log files; unset means console only."""
    return os.getenv("TORIC_LOG_DIR") or None


def tracing_enabled() -> bool:
    return os.getenv("TORIC_TRACING", "0").lower() in {"1", "true", "yes"}


DEFAULT_GUARDS = Guards()
