"""
Volumes and Mixed Volumes

Exact Lebesgue volume (shoelace in the plane, coning triangulation above),
Minkowski sums, the inclusion-exclusion mixed volume and the planar lattice
invariants behind Pick's formula.
"""

import itertools
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, gcd
from typing import FrozenSet, List, Sequence, Tuple

from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import DegeneratePolytopeError, DimensionMismatchError, InputError

from .exact_linalg import det, rank
from .polytopes import LatticePolytope, Polytope, convex_hull, require_dimension


def minkowski_sum(A: Polytope, B: Polytope) -> Polytope:
    """Hull of all pairwise vertex sums."""
    if A.dim != B.dim:
        raise DimensionMismatchError(f"cannot add polytopes of dimensions {A.dim} and {B.dim}")
    return _minkowski_sum(A, B)


@lru_cache(maxsize=4096)
def _minkowski_sum(A: Polytope, B: Polytope) -> Polytope:
    return convex_hull(
        tuple(x + y for x, y in zip(a, b)) for a in A.vertices for b in B.vertices
    )


def shoelace_area(cycle: Sequence[Sequence]) -> Fraction:
    """Area of a simple polygon given counterclockwise."""
    twice = sum(
        Fraction(p[0]) * q[1] - Fraction(p[1]) * q[0]
        for p, q in zip(cycle, list(cycle[1:]) + list(cycle[:1]))
    )
    return abs(twice) / 2


def _triangulation(vertices: Sequence[Tuple], facets: List[FrozenSet[int]]) -> List[Tuple[int, ...]]:
    """
    Simplices (as vertex index tuples) of a pulling triangulation.

    Each face is coned from its smallest vertex over those of its facets that
    avoid it; the facets of a face are the intersections with facets of the
    polytope that drop exactly one dimension.
    """
    base_dims = {}

    def face_dim(face: FrozenSet[int]) -> int:
        if face not in base_dims:
            pts = [vertices[i] for i in sorted(face)]
            base_dims[face] = rank([[x - y for x, y in zip(p, pts[0])] for p in pts[1:]]) if len(pts) > 1 else 0
        return base_dims[face]

    def cone(face: FrozenSet[int], k: int) -> List[Tuple[int, ...]]:
        if k == 1:
            return [tuple(sorted(face))]
        apex = min(face)
        simplices = []
        for sub in {face & g for g in facets}:
            if apex in sub or len(sub) < k or face_dim(sub) != k - 1:
                continue
            simplices.extend((apex,) + s for s in cone(sub, k - 1))
        return simplices

    return cone(frozenset(range(len(vertices))), len(vertices[0]))


def volume(P: Polytope, guards: Guards = DEFAULT_GUARDS) -> Fraction:
    """Exact r-dimensional volume; 0 for lower-dimensional polytopes."""
    require_dimension(P.dim, guards)
    return _volume(P)


@lru_cache(maxsize=4096)
def _volume(P: Polytope) -> Fraction:
    r = P.dim
    if not P.is_full_dimensional:
        return Fraction(0)
    if r == 1:
        return Fraction(P.vertices[-1][0] - P.vertices[0][0])
    if r == 2:
        return shoelace_area(P.boundary_cycle())

    vertices = P.vertices
    facets = [
        frozenset(i for i, v in enumerate(vertices) if h.slack(v) == 0) for h in P.halfspaces.rows
    ]
    total = Fraction(0)
    for simplex in _triangulation(vertices, facets):
        apex = vertices[simplex[0]]
        edges = [[x - y for x, y in zip(vertices[i], apex)] for i in simplex[1:]]
        total += abs(det(edges))
    return total / factorial(r)


def mixed_volume(polytopes: Sequence[Polytope], guards: Guards = DEFAULT_GUARDS) -> Fraction:
    """
    Mixed volume V_r(P_1, ..., P_r) by inclusion-exclusion over Minkowski sums.

    Args:
        polytopes: exactly r polytopes, all in Z^r or Q^r

    Returns:
        (1/r!) * sum over nonempty index sets S of (-1)^(r-|S|) Vol(sum of P_i, i in S)
    """
    if not polytopes:
        raise InputError("mixed volume needs at least one polytope")
    r = polytopes[0].dim
    if len(polytopes) != r:
        raise InputError(f"mixed volume in dimension {r} needs {r} polytopes, got {len(polytopes)}")
    if any(P.dim != r for P in polytopes):
        raise DimensionMismatchError("mixed volume operands must share one dimension")
    require_dimension(r, guards)

    total = Fraction(0)
    for j in range(1, r + 1):
        sign = -1 if (r - j) % 2 else 1
        for subset in itertools.combinations(range(r), j):
            summed = reduce(minkowski_sum, (polytopes[i] for i in subset))
            total += sign * _volume(summed)
    return total / factorial(r)


def lattice_perimeter(P: LatticePolytope) -> int:
    """Number of boundary lattice points of a lattice polygon."""
    cycle = P.boundary_cycle()
    return sum(
        gcd(abs(q[0] - p[0]), abs(q[1] - p[1])) for p, q in zip(cycle, cycle[1:] + cycle[:1])
    )


def pick_count(P: LatticePolytope) -> int:
    """
    Lattice-point count of a lattice polygon from area and boundary.

    Raises:
        DegeneratePolytopeError: P is not a polygon of positive area
    """
    if not isinstance(P, LatticePolytope) or P.dim != 2:
        raise InputError("pick_count needs a 2-dimensional lattice polytope")
    if not P.is_full_dimensional:
        raise DegeneratePolytopeError("pick_count needs a polygon of positive area")
    count = volume(P) + Fraction(lattice_perimeter(P), 2) + 1
    return int(count)
