"""
Lattice geometry: exact polytope representations, lattice points, volumes,
mixed volumes and divisor-shifted facet systems.
"""

from .divisors import char_zero_divisor_system, divisor_shift_system
from .polytope_io import dump_polytope, load_polytope, parse_polytope
from .polytopes import (
    Halfspace,
    HalfspaceSystem,
    LatticePoint,
    LatticePolytope,
    RationalPolytope,
    axis_segment,
    convex_hull,
    coordinate_box,
    facet_representation,
    lattice_points,
    normal_fan_is_smooth,
    pairing,
    project,
    vertex_enumeration,
    width,
)
from .volumes import lattice_perimeter, minkowski_sum, mixed_volume, pick_count, volume

__all__ = [
    "Halfspace",
    "HalfspaceSystem",
    "LatticePoint",
    "LatticePolytope",
    "RationalPolytope",
    "axis_segment",
    "char_zero_divisor_system",
    "convex_hull",
    "coordinate_box",
    "divisor_shift_system",
    "dump_polytope",
    "facet_representation",
    "lattice_perimeter",
    "lattice_points",
    "load_polytope",
    "minkowski_sum",
    "mixed_volume",
    "normal_fan_is_smooth",
    "pairing",
    "parse_polytope",
    "pick_count",
    "project",
    "vertex_enumeration",
    "volume",
    "width",
]
