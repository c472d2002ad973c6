"""
CLI Package

Command-line front end: argument parsing, command handlers and output
rendering.
"""

from .app import build_parser, main, run
from .config import RunConfig, build_config
from .output import render, write_output

__all__ = [
    "RunConfig",
    "build_config",
    "build_parser",
    "main",
    "render",
    "run",
    "write_output",
]
