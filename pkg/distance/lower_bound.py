"""
Intersection Lower Bound

Counts zeros of a codeword line by line. The torus splits into lines on which
all coordinates but one are fixed; a nonzero f either vanishes on a whole
line (at most `a` lines in a family) or has at most m zeros on it, where m is
an intersection number computed as a mixed volume of P with the polytopes of
the zero divisors of the coordinate characters. The zero count of f is then
at most a(q-1) + (L - a) min(m, q-1) for L lines, and d >= n minus that.
"""

from collections import defaultdict
from dataclasses import asdict, dataclass, field
from math import factorial, floor
from typing import Any, Dict, List, Optional, Tuple

from geometry import (
    LatticePolytope,
    axis_segment,
    char_zero_divisor_system,
    divisor_shift_system,
    lattice_points,
    mixed_volume,
    normal_fan_is_smooth,
    project,
    vertex_enumeration,
)
from geometry.polytopes import Polytope, require_dimension
from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import EmptyRegionError, InputError
from utils.observability import get_logger

logger = get_logger("distance")


@dataclass
class Bound2D:
    """
    Two-dimensional bound in one orientation.

    Attributes:
        bound: headline value (q-1)^2 - (a(q-1) + (q-1-a) min(m, q-1))
        a: clamped count of lines that can vanish entirely
        m: intersection number with the unshifted divisor
        refined_bound: (q-1)^2 - max over a' <= a of the zero count with m(a')
        profile: m(a') for each feasible shift a' = 0, 1, ...
        transposed: whether the coordinates were swapped
    """

    bound: int
    a: int
    m: int
    refined_bound: int
    profile: List[int] = field(default_factory=list)
    transposed: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class LevelWitness:
    """One level of the dimension recursion."""

    dim: int
    line_axis: int
    a: int
    m: int
    zeros: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class LowerBound:
    """Lower bound on the minimum distance with its witnesses."""

    bound: int
    refined_bound: int
    n: int
    levels: List[LevelWitness]
    planar: Optional[Bound2D] = None
    smooth_fan: Optional[bool] = None

    @property
    def trivial(self) -> bool:
        return self.bound <= 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound": self.bound,
            "refined_bound": self.refined_bound,
            "levels": [level.to_dict() for level in self.levels],
            "planar": self.planar.to_dict() if self.planar else None,
            "smooth_fan": self.smooth_fan,
        }


def _unit(i: int, r: int) -> Tuple[int, ...]:
    return tuple(int(j == i) for j in range(r))


def _zero_polytope(P: Polytope, axis: int) -> Polytope:
    """Polytope of (div chi^{e_axis})_0 on the fan of P; axis is 1-based."""
    if not P.is_full_dimensional:
        return axis_segment(axis, P.dim)
    system = char_zero_divisor_system(P.halfspaces, _unit(axis - 1, P.dim))
    return vertex_enumeration(system)


def _intersection_number(polytopes: List[Polytope]) -> int:
    """floor(r! V_r(...)); zero counts are integers."""
    r = polytopes[0].dim
    return floor(factorial(r) * mixed_volume(polytopes))


def a_bound_2d(P: LatticePolytope, guards: Guards = DEFAULT_GUARDS) -> int:
    """Longest run of lattice points of P along the first axis at fixed second coordinate."""
    if P.dim != 2:
        raise InputError("a_bound_2d needs a 2-dimensional polytope")
    extent: Dict[int, List[int]] = defaultdict(list)
    for u1, u2 in lattice_points(P, guards):
        extent[u2].append(u1)
    return max((max(row) - min(row) for row in extent.values()), default=0)


def _zero_count(a: int, m: int, lines: int, per_line: int) -> int:
    return a * per_line + (lines - a) * min(m, per_line)


def _bound_2d_oriented(P: LatticePolytope, q: int, guards: Guards, transposed: bool) -> Bound2D:
    n1 = q - 1
    a = min(max(a_bound_2d(P, guards), 0), n1)
    zero_poly = _zero_polytope(P, 1)
    m0 = _intersection_number([P, zero_poly])
    headline = n1 * n1 - _zero_count(a, m0, n1, n1)

    if not P.is_full_dimensional:
        return Bound2D(headline, a, m0, headline, [m0], transposed)

    e1 = _unit(0, 2)
    profile: List[int] = []
    worst = 0
    for shift in range(a + 1):
        try:
            shifted = vertex_enumeration(divisor_shift_system(P.halfspaces, e1, shift))
        except EmptyRegionError:
            break
        m = _intersection_number([shifted, zero_poly])
        profile.append(m)
        worst = max(worst, _zero_count(shift, m, n1, n1))
    return Bound2D(headline, a, m0, n1 * n1 - worst, profile, transposed)


def intersection_lower_bound_2d(
    P: LatticePolytope,
    q: int,
    guards: Guards = DEFAULT_GUARDS,
    both_orientations: bool = True
) -> Bound2D:
    """
    Planar lower bound, best of P and its transpose.

    Args:
        P: polytope in Z^2
        q: field size
        both_orientations: also evaluate with the axes swapped

    Returns:
        Bound2D of the orientation with the larger headline bound; its
        refined_bound is the best refined value of either orientation
    """
    if P.dim != 2:
        raise InputError("intersection_lower_bound_2d needs a 2-dimensional polytope")
    candidates = [_bound_2d_oriented(P, q, guards, False)]
    if both_orientations:
        candidates.append(_bound_2d_oriented(P.transpose(), q, guards, True))
    best = max(candidates, key=lambda b: b.bound)
    refined = max(b.refined_bound for b in candidates)
    logger.debug("Planar bound", q=q, bound=best.bound, refined=refined, a=best.a, m=best.m)
    return Bound2D(best.bound, best.a, best.m, max(refined, best.bound), best.profile, best.transposed)


def _planar_zeros(planar: Bound2D, q: int) -> Tuple[int, int, List[LevelWitness]]:
    n = (q - 1) ** 2
    witness = LevelWitness(2, 1 if planar.transposed else 2, planar.a, planar.m, n - planar.bound)
    return n - planar.bound, n - planar.refined_bound, [witness]


def _max_zeros(P: Polytope, q: int, guards: Guards) -> Tuple[int, int, List[LevelWitness]]:
    """
    Upper bounds on the number of zeros of a nonzero codeword of C_P.

    Returns:
        (headline zero count, refined zero count, level witnesses)
    """
    r = P.dim
    n1 = q - 1
    if r == 2:
        return _planar_zeros(intersection_lower_bound_2d(P, q, guards), q)

    best: Optional[Tuple[int, int, List[LevelWitness]]] = None
    lines = n1 ** (r - 1)
    for axis in range(r, 0, -1):
        order = [i for i in range(r) if i != axis - 1] + [axis - 1]
        rotated = P.permute_axes(order)
        sub_zeros, sub_refined, sub_levels = _max_zeros(project(rotated, r), q, guards)

        zero_polys = [_zero_polytope(rotated, i) for i in range(1, r)]
        m = _intersection_number([rotated] + zero_polys)
        a = min(max(sub_zeros, 0), lines)
        a_refined = min(max(sub_refined, 0), lines)
        zeros = _zero_count(a, m, lines, n1)
        refined = min(zeros, _zero_count(a_refined, m, lines, n1))

        levels = sub_levels + [LevelWitness(r, axis, a, m, zeros)]
        if best is None or (zeros, refined) < (best[0], best[1]):
            best = (zeros, refined, levels)
    return best


def intersection_lower_bound(P: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> LowerBound:
    """
    Lower bound on d(C_P) for 2 <= r <= guards.max_dim.

    Level r fixes all coordinates but one; the number of entirely vanishing
    lines is bounded by the zero bound of the projected polytope's code.
    Every axis is tried as the line direction and the best value is kept.
    The bound is reported raw and may be nonpositive.
    """
    r = P.dim
    if r < 2:
        raise InputError("the intersection bound needs dimension r >= 2")
    require_dimension(r, guards)
    n = (q - 1) ** r

    planar = None
    if r == 2:
        planar = intersection_lower_bound_2d(P, q, guards)
        zeros, refined_zeros, levels = _planar_zeros(planar, q)
    else:
        zeros, refined_zeros, levels = _max_zeros(P, q, guards)
    smooth = normal_fan_is_smooth(P) if P.is_full_dimensional else None
    return LowerBound(
        bound=n - zeros,
        refined_bound=n - refined_zeros,
        n=n,
        levels=levels,
        planar=planar,
        smooth_fan=smooth,
    )
