"""
Test Suite for Lattice Polytope Geometry

Covers:
1. Canonical V-representation and convex hulls
2. Facet representation and vertex enumeration round trip
3. Lattice points, volumes and Pick's formula
4. Mixed volumes
5. Divisor systems and polytope JSON
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from geometry import (
    LatticePolytope,
    axis_segment,
    char_zero_divisor_system,
    convex_hull,
    coordinate_box,
    divisor_shift_system,
    dump_polytope,
    facet_representation,
    lattice_perimeter,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    normal_fan_is_smooth,
    pairing,
    parse_polytope,
    pick_count,
    project,
    vertex_enumeration,
    volume,
    width,
)
from utils.config import Guards
from utils.errors import (
    DegeneratePolytopeError,
    DimensionMismatchError,
    EmptyRegionError,
    GuardExceededError,
    InputError,
    NotFullDimensionalError,
    UnboundedRegionError,
)
from geometry import HalfspaceSystem


# ============================================================================
# TEST DATA FIXTURES
# ============================================================================

def get_sample_hexagon(b=1):
    """Hexagon with side b used throughout the distance tests"""
    return LatticePolytope(((0, 0), (b, 0), (2 * b, b), (2 * b, 2 * b), (b, 2 * b), (0, b)))


def get_random_polygons(count, side=10, seed=7):
    """Full-dimensional lattice polygons from random point clouds"""
    rng = random.Random(seed)
    polygons = []
    while len(polygons) < count:
        points = [(rng.randint(0, side), rng.randint(0, side)) for _ in range(rng.randint(3, 8))]
        P = convex_hull(points)
        if P.is_full_dimensional:
            polygons.append(P)
    return polygons


# ============================================================================
# V-REPRESENTATION
# ============================================================================

def test_vertices_are_canonical():
    """Interior and duplicate points are dropped; vertices sorted"""
    P = LatticePolytope(((2, 2), (0, 0), (1, 1), (2, 0), (0, 2), (0, 0)))
    assert P.vertices == ((0, 0), (0, 2), (2, 0), (2, 2)), f"Unexpected vertices {P.vertices}"
    assert P == coordinate_box((2, 2)), "Equal hulls should compare equal"
    assert P.dim == 2 and P.is_full_dimensional


def test_collinear_points_keep_endpoints():
    P = convex_hull([(0, 0), (1, 0), (3, 0), (2, 0)])
    assert P.vertices == ((0, 0), (3, 0))
    assert P.affine_dim == 1 and not P.is_full_dimensional


def test_convex_hull_rational():
    P = convex_hull([(0, 0), (Fraction(1, 2), 0), (0, 1)])
    assert not isinstance(P, LatticePolytope), "Half-integral vertices must give a rational polytope"
    assert volume(P) == Fraction(1, 4)


def test_lattice_polytope_rejects_fractions():
    with pytest.raises(InputError):
        LatticePolytope(((0, 0), (Fraction(1, 2), 1)))


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionMismatchError):
        LatticePolytope(((0, 0), (1, 0, 0)))


def test_dimension_guard():
    with pytest.raises(GuardExceededError):
        LatticePolytope(((0, 0, 0, 0, 0), (1, 0, 0, 0, 0)))


def test_pairing():
    assert pairing((1, 2, 3), (4, 5, 6)) == 32
    with pytest.raises(DimensionMismatchError):
        pairing((1, 2), (1, 2, 3))


# ============================================================================
# H-REPRESENTATION
# ============================================================================

def test_unit_square_facets():
    """Counterclockwise normals starting from the positive first axis"""
    H = facet_representation(coordinate_box((1, 1)))
    assert H.normals == [(1, 0), (0, 1), (-1, 0), (0, -1)], f"Got normals {H.normals}"
    assert H.offsets == [0, 0, 1, 1], f"Got offsets {H.offsets}"


def test_cube_facets():
    H = facet_representation(coordinate_box((1, 1, 1)))
    assert len(H.rows) == 6
    assert set(H.normals) == {
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)
    }
    assert H.normals[0] == (1, 0, 0), "Ordering starts with the first axis, positive sign"


def test_facets_of_lower_dimensional_polytope_fail():
    with pytest.raises(NotFullDimensionalError):
        facet_representation(convex_hull([(0, 0), (2, 2)]))


def test_round_trip_random_polygons():
    """vertex_enumeration(facet_representation(P)) == P"""
    for P in get_random_polygons(60):
        Q = vertex_enumeration(facet_representation(P))
        assert Q.vertices == P.vertices, f"Round trip changed {P.vertices} into {Q.vertices}"
        assert Q.to_lattice() == P


def test_round_trip_simplex_3d():
    P = LatticePolytope(((0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1)))
    Q = vertex_enumeration(P.halfspaces)
    assert Q.vertices == P.vertices


def test_vertex_enumeration_unbounded():
    H = HalfspaceSystem.from_rows(2, [((1, 0), 0), ((0, 1), 0)])
    with pytest.raises(UnboundedRegionError):
        vertex_enumeration(H)


def test_vertex_enumeration_empty():
    H = HalfspaceSystem.from_rows(2, [((1, 0), -2), ((-1, 0), 1), ((0, 1), 0), ((0, -1), 1)])
    with pytest.raises(EmptyRegionError):
        vertex_enumeration(H)


def test_halfspace_normals_must_be_primitive():
    with pytest.raises(InputError):
        HalfspaceSystem.from_rows(2, [((2, 0), 0)])


def test_normal_fan_smoothness():
    assert normal_fan_is_smooth(coordinate_box((2, 3)))
    assert normal_fan_is_smooth(get_sample_hexagon())
    assert not normal_fan_is_smooth(LatticePolytope(((0, 0), (2, 1), (1, 2)))), "Cone of det 3 is singular"


# ============================================================================
# LATTICE POINTS, VOLUME, PICK
# ============================================================================

def test_hexagon_lattice_points():
    points = lattice_points(get_sample_hexagon())
    assert points == [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)], f"Got {points}"
    assert (1, 1) in get_sample_hexagon()
    assert (2, 0) not in get_sample_hexagon()


def test_lattice_points_of_segment_in_3d():
    P = convex_hull([(0, 0, 0), (2, 4, 6)])
    assert lattice_points(P) == [(0, 0, 0), (1, 2, 3), (2, 4, 6)]


def test_lattice_points_box_guard():
    with pytest.raises(GuardExceededError):
        lattice_points(coordinate_box((100, 100)), Guards(max_box=100))


def test_hexagon_area_and_pick():
    for b in (1, 2, 3):
        P = get_sample_hexagon(b)
        assert volume(P) == 3 * b * b, f"b={b}: area {volume(P)}"
        assert lattice_perimeter(P) == 6 * b
        assert pick_count(P) == len(lattice_points(P)) == 3 * b * b + 3 * b + 1


def test_pick_random_polygons():
    """Pick's formula agrees with enumeration on 200 random polygons"""
    for P in get_random_polygons(200, side=12, seed=2024):
        assert pick_count(P) == len(lattice_points(P)), f"Pick mismatch on {P.vertices}"


def test_pick_degenerate():
    with pytest.raises(DegeneratePolytopeError):
        pick_count(convex_hull([(0, 0), (3, 0)]))


def test_volume_3d():
    assert volume(coordinate_box((1, 2, 3))) == 6
    assert volume(LatticePolytope(((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))) == Fraction(1, 6)
    assert volume(convex_hull([(0, 0, 0), (1, 1, 0), (2, 0, 0)])) == 0, "Flat polytopes have no volume"


def test_projection_and_width():
    P = LatticePolytope(((0, 0, 0), (2, 0, 1), (0, 3, 2)))
    assert project(P, 3).vertices == ((0, 0), (0, 3), (2, 0))
    assert width(P, 2) == 3
    with pytest.raises(InputError):
        project(axis_segment(1, 1), 1)


# ============================================================================
# MIXED VOLUMES
# ============================================================================

def test_mixed_volume_with_itself_is_volume():
    for P in get_random_polygons(40, side=6, seed=11):
        assert mixed_volume([P, P]) == volume(P)
    cube = coordinate_box((1, 2, 1))
    assert mixed_volume([cube, cube, cube]) == volume(cube)


def test_mixed_volume_symmetric_and_multilinear():
    """V(P, Q) = V(Q, P) and V(P + P', Q) = V(P, Q) + V(P', Q)"""
    polygons = get_random_polygons(120, side=5, seed=3)
    for P, P2, Q in zip(polygons[0::3], polygons[1::3], polygons[2::3]):
        assert mixed_volume([P, Q]) == mixed_volume([Q, P])
        assert mixed_volume([minkowski_sum(P, P2), Q]) == mixed_volume([P, Q]) + mixed_volume([P2, Q])


def test_mixed_volume_with_segment_is_half_projected_width():
    """2 V(P, [-e1, 0]) is the length of the projection of P onto the second axis"""
    segment = axis_segment(1, 2)
    for P in get_random_polygons(50, side=8, seed=5):
        assert 2 * mixed_volume([P, segment]) == width(P, 2)


def test_mixed_volume_boxes_3d():
    """V(box, e-segment, e-segment) on unit axes"""
    box = coordinate_box((2, 3, 4))
    value = mixed_volume([box, axis_segment(1, 3), axis_segment(2, 3)])
    assert 6 * value == 4, f"3! V = {6 * value}, expected the third side 4"


def test_mixed_volume_arity():
    with pytest.raises(InputError):
        mixed_volume([coordinate_box((1, 1))])


# ============================================================================
# DIVISOR SYSTEMS AND JSON
# ============================================================================

def test_zero_divisor_of_first_character_on_square():
    H = facet_representation(coordinate_box((1, 1)))
    Z = vertex_enumeration(char_zero_divisor_system(H, (1, 0)))
    assert Z.vertices == ((-1, 0), (0, 0)), f"Got {Z.vertices}"


def test_hexagon_shift_systems():
    """Shifting by a(div x)_0 moves the left edge right by a"""
    b = 2
    H = get_sample_hexagon(b).halfspaces
    for a in range(b + 1):
        shifted = vertex_enumeration(divisor_shift_system(H, (1, 0), a))
        assert volume(shifted) == 3 * b * b - 2 * a * b
        assert (a, b) in shifted.vertices
    with pytest.raises(EmptyRegionError):
        vertex_enumeration(divisor_shift_system(H, (1, 0), 3 * b))
    with pytest.raises(InputError):
        divisor_shift_system(H, (1, 0), -1)


def test_polytope_json():
    P = parse_polytope('{"vertices": [[0, 0], [2, 0], [0, 2], [1, 1]]}')
    assert P.vertices == ((0, 0), (0, 2), (2, 0))
    assert parse_polytope(dump_polytope(P)) == P


@pytest.mark.parametrize("text", [
    "not json",
    '{"vertices": []}',
    '{"vertices": [[0, 0], [1]]}',
    '{"vertices": [[0, 0.5]]}',
    '{"vertices": [[0, 0]], "extra": 1}',
])
def test_polytope_json_rejects(text):
    with pytest.raises(InputError):
        parse_polytope(text)


def test_mixed_volume_properties_3d():
    """V(P, P, P) = Vol(P), 3! V(P, segments) = width, 3! Vol(P) integral"""
    rng = random.Random(31)
    checked = 0
    while checked < 50:
        points = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(rng.randint(4, 6))]
        P = convex_hull(points)
        if not P.is_full_dimensional:
            continue
        checked += 1
        assert mixed_volume([P, P, P]) == volume(P), f"V(P,P,P) != Vol(P) on {P.vertices}"
        assert 6 * mixed_volume([P, axis_segment(1, 3), axis_segment(2, 3)]) == width(P, 3)
        assert (6 * volume(P)).denominator == 1
