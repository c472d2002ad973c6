"""
Minimum-distance machinery for toric codes: exhaustive search, the
intersection lower bound, the box upper bound and closed-form checks.
"""

from .closed_forms import (
    ConjectureReport,
    hypercube_params,
    hypercube_recursion,
    joyner_42_check,
    joyner_43_check,
)
from .exhaustive import ExactResult, exact_min_distance, gray_digits, message_count
from .lower_bound import (
    Bound2D,
    LevelWitness,
    LowerBound,
    a_bound_2d,
    intersection_lower_bound,
    intersection_lower_bound_2d,
)
from .report import DistanceReport, analyze_distance
from .upper_bound import UpperBound, admissible_anchors, box_upper_bound, reduced_mask

__all__ = [
    "Bound2D",
    "ConjectureReport",
    "DistanceReport",
    "ExactResult",
    "LevelWitness",
    "LowerBound",
    "UpperBound",
    "a_bound_2d",
    "admissible_anchors",
    "analyze_distance",
    "box_upper_bound",
    "exact_min_distance",
    "gray_digits",
    "hypercube_params",
    "hypercube_recursion",
    "intersection_lower_bound",
    "intersection_lower_bound_2d",
    "joyner_42_check",
    "joyner_43_check",
    "message_count",
    "reduced_mask",
]
