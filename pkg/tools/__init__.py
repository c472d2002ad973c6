"""
Tools Package

Process-pool helpers for splitting exhaustive searches into ranges.
"""

from .parallel_search import map_ranges, run_ranges, split_range

__all__ = [
    "map_ranges",
    "run_ranges",
    "split_range",
]
