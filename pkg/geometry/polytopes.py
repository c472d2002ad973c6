"""
Lattice Polytopes

V- and H-representations of convex polytopes with integer or rational
vertices, exact lattice-point enumeration, coordinate projections and the
axis segments used by the distance bounds.

Polytopes are immutable and canonical: vertices are deduplicated, reduced to
the extreme points of their hull and sorted lexicographically, so two
polytopes are equal iff their vertex tuples are.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key, reduce
from math import ceil, floor, lcm
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import (
    DimensionMismatchError,
    EmptyRegionError,
    GuardExceededError,
    InputError,
    NotFullDimensionalError,
    UnboundedRegionError,
)

from .exact_linalg import (
    batched_normals,
    common_denominator,
    det,
    integer_array,
    nullspace,
    primitive,
    rank,
    row_echelon,
    row_gcd,
    solve,
)

LatticePoint = Tuple[int, ...]
RationalPoint = Tuple[Fraction, ...]

# r-subsets examined per numpy batch in the facet search
_BATCH = 4096


def require_dimension(r: int, guards: Guards = DEFAULT_GUARDS) -> None:
    """Enforce the operational dimension cap."""
    if r < 1:
        raise InputError(f"dimension must be at least 1, got {r}")
    if r > guards.max_dim:
        raise GuardExceededError("max_dim", r, guards.max_dim)


def pairing(u: Sequence, v: Sequence):
    """Dual pairing <u, v> as an exact dot product."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot pair vectors of dimensions {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# Hull kernels
# ---------------------------------------------------------------------------

def _affine_frame(points: Sequence[Sequence]) -> Tuple[int, Tuple[int, ...]]:
    """Affine dimension of a point set and coordinate axes injective on its hull."""
    base = points[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0, ()
    _, pivots = row_echelon(diffs)
    return len(pivots), tuple(pivots)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _monotone_chain(points: Sequence[Tuple]) -> List[Tuple]:
    """Counterclockwise hull of sorted distinct planar points, lex-smallest first."""
    lower: List[Tuple] = []
    for p in points:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Tuple] = []
    for p in reversed(points):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _full_dim_facets(points: Sequence[Tuple]) -> Tuple[List[LatticePoint], List[Fraction], np.ndarray]:
    """
    Facets of a full-dimensional point set in dimension r >= 3.

    Every r-subset spans a candidate hyperplane; it supports a facet when all
    points lie on one side. Side tests run on integer arrays (rational input
    is scaled by the common denominator).

    Returns:
        (primitive inward normals, offsets a_F, boolean incidence matrix
        facets x points)
    """
    denom = common_denominator(points)
    scaled = [tuple(int(Fraction(x) * denom) for x in p) for p in points]
    X = integer_array(scaled)
    n_points, r = X.shape

    found = set()
    combos = itertools.combinations(range(n_points), r)
    while True:
        chunk = list(itertools.islice(combos, _BATCH))
        if not chunk:
            break
        C = np.array(chunk)
        base = X[C[:, 0]]
        diffs = X[C[:, 1:]] - base[:, None, :]
        normals = batched_normals(diffs)
        nonzero = np.any(normals != 0, axis=1)
        if not np.any(nonzero):
            continue
        normals, base = normals[nonzero], base[nonzero]
        side = normals.dot(X.T) - np.sum(normals * base, axis=1)[:, None]
        above = np.all(side >= 0, axis=1)
        below = np.all(side <= 0, axis=1)
        normals = np.where(below[:, None], -normals, normals)[above | below]
        if len(normals) == 0:
            continue
        normals = normals // row_gcd(normals)[:, None]
        found.update(tuple(int(x) for x in row) for row in normals)

    normal_list = sorted(found)
    N = integer_array(normal_list)
    values = N.dot(X.T)
    minima = values.min(axis=1)
    incidence = values == minima[:, None]
    offsets = [Fraction(-int(m), denom) for m in minima]
    return normal_list, offsets, incidence


def _extreme_full(points: List[Tuple]) -> List[Tuple]:
    r = len(points[0])
    if r == 1:
        return [points[0], points[-1]]
    if r == 2:
        return _monotone_chain(points)
    normals, _, incidence = _full_dim_facets(points)
    keep = []
    for j, p in enumerate(points):
        active = [normals[i] for i in range(len(normals)) if incidence[i, j]]
        if len(active) >= r and rank(active) == r:
            keep.append(p)
    return keep


def extreme_points(points: Iterable[Sequence]) -> Tuple[Tuple, ...]:
    """Deduplicated, lexicographically sorted extreme points of a finite set."""
    unique = sorted(set(tuple(p) for p in points))
    if len(unique) <= 1:
        return tuple(unique)
    d, axes = _affine_frame(unique)
    if d < len(unique[0]):
        projected = [tuple(p[i] for i in axes) for p in unique]
        keep = set(_extreme_full(sorted(projected)))
        return tuple(p for p, proj in zip(unique, projected) if proj in keep)
    return tuple(sorted(_extreme_full(unique)))


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Halfspace:
    """{u : <u, normal> >= -offset}"""

    normal: LatticePoint
    offset: Fraction

    def slack(self, point: Sequence) -> Fraction:
        return pairing(point, self.normal) + self.offset

    def contains(self, point: Sequence) -> bool:
        return self.slack(point) >= 0


@dataclass(frozen=True)
class HalfspaceSystem:
    """
    Facet normals and offsets of a polytope or of a shifted divisor system.

    Normals are primitive integer vectors; offsets are exact rationals.
    """

    dim: int
    rows: Tuple[Halfspace, ...]

    def __post_init__(self):
        rows = tuple(
            Halfspace(tuple(int(x) for x in h.normal), Fraction(h.offset)) for h in self.rows
        )
        for h in rows:
            if len(h.normal) != self.dim:
                raise DimensionMismatchError(
                    f"normal {h.normal} does not live in dimension {self.dim}"
                )
            if primitive(h.normal) != h.normal or not any(h.normal):
                raise InputError(f"normal {h.normal} is not a primitive nonzero vector")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Tuple[Sequence[int], object]]) -> "HalfspaceSystem":
        return cls(dim, tuple(Halfspace(tuple(n), Fraction(a)) for n, a in rows))

    @property
    def normals(self) -> List[LatticePoint]:
        return [h.normal for h in self.rows]

    @property
    def offsets(self) -> List[Fraction]:
        return [h.offset for h in self.rows]

    def contains(self, point: Sequence) -> bool:
        return all(h.contains(point) for h in self.rows)

    def with_offsets(self, offsets: Sequence) -> "HalfspaceSystem":
        if len(offsets) != len(self.rows):
            raise DimensionMismatchError(
                f"expected {len(self.rows)} offsets, got {len(offsets)}"
            )
        return HalfspaceSystem(
            self.dim, tuple(Halfspace(h.normal, Fraction(a)) for h, a in zip(self.rows, offsets))
        )


@dataclass(frozen=True)
class _Polytope:
    vertices: Tuple[Tuple, ...]

    def __post_init__(self):
        points = [tuple(self._coerce(x) for x in v) for v in self.vertices]
        if not points:
            raise InputError("a polytope needs at least one vertex")
        r = len(points[0])
        if any(len(p) != r for p in points):
            raise DimensionMismatchError("all vertices must have the same dimension")
        require_dimension(r)
        object.__setattr__(self, "vertices", extreme_points(points))

    @staticmethod
    def _coerce(x):
        raise NotImplementedError

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def affine_dim(self) -> int:
        return _affine_frame(self.vertices)[0]

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim

    @cached_property
    def halfspaces(self) -> HalfspaceSystem:
        return facet_representation(self)

    def boundary_cycle(self) -> List[Tuple]:
        """Vertices of a full-dimensional polygon in counterclockwise order."""
        if self.dim != 2 or not self.is_full_dimensional:
            raise InputError("boundary_cycle needs a full-dimensional polygon")
        return _monotone_chain(list(self.vertices))

    def translate(self, shift: Sequence):
        if len(shift) != self.dim:
            raise DimensionMismatchError("translation vector has the wrong dimension")
        return convex_hull(tuple(x + s for x, s in zip(v, shift)) for v in self.vertices)

    def permute_axes(self, order: Sequence[int]):
        """Polytope with coordinate i taken from axis order[i] (0-based)."""
        if sorted(order) != list(range(self.dim)):
            raise InputError(f"{list(order)} is not a permutation of the axes")
        return type(self)(tuple(tuple(v[i] for i in order) for v in self.vertices))

    def transpose(self):
        """Reverse the coordinate order (swap axes in 2-D)."""
        return self.permute_axes(list(reversed(range(self.dim))))

    def __contains__(self, point) -> bool:
        return _MembershipTest.of(self).contains_point(point)


@dataclass(frozen=True)
class LatticePolytope(_Polytope):
    """Convex hull of finitely many points of Z^r."""

    vertices: Tuple[LatticePoint, ...]

    @staticmethod
    def _coerce(x) -> int:
        value = Fraction(x)
        if value.denominator != 1:
            raise InputError(f"lattice polytope coordinate {x} is not an integer")
        return int(value)


@dataclass(frozen=True)
class RationalPolytope(_Polytope):
    """Convex hull of finitely many points of Q^r."""

    vertices: Tuple[RationalPoint, ...]

    @staticmethod
    def _coerce(x) -> Fraction:
        return Fraction(x)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def to_lattice(self) -> LatticePolytope:
        if not self.is_integral:
            raise InputError("polytope has non-integral vertices")
        return LatticePolytope(self.vertices)


Polytope = LatticePolytope | RationalPolytope


def convex_hull(points: Iterable[Sequence]) -> Polytope:
    """Lattice polytope when every coordinate is integral, rational otherwise."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if all(x.denominator == 1 for p in pts for x in p):
        return LatticePolytope(tuple(tuple(int(x) for x in p) for p in pts))
    return RationalPolytope(tuple(pts))


# ---------------------------------------------------------------------------
# Facet representation and vertex enumeration
# ---------------------------------------------------------------------------

def _half_plane(n: Sequence[int]) -> int:
    x, y = n
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_compare(a: Sequence[int], b: Sequence[int]) -> int:
    ha, hb = _half_plane(a), _half_plane(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _facet_order(normal: Sequence[int]):
    first = next(i for i, x in enumerate(normal) if x != 0)
    return (first, 0 if normal[first] > 0 else 1, tuple(-x for x in normal))


def facet_representation(P: Polytope, guards: Guards = DEFAULT_GUARDS) -> HalfspaceSystem:
    """
    Irredundant facet description of a full-dimensional polytope.

    In 2-D the rows are ordered counterclockwise by normal angle starting
    from the positive first axis; in higher dimension by the index of the
    first nonzero normal coordinate, positive sign first.

    Raises:
        NotFullDimensionalError: P is lower-dimensional in its ambient lattice
    """
    r = P.dim
    require_dimension(r, guards)
    if not P.is_full_dimensional:
        raise NotFullDimensionalError(
            f"polytope has dimension {P.affine_dim} in Z^{r}; drop coordinates first"
        )
    rows: List[Tuple[LatticePoint, Fraction]] = []
    if r == 1:
        lo, hi = P.vertices[0][0], P.vertices[-1][0]
        rows = [((1,), -Fraction(lo)), ((-1,), Fraction(hi))]
    elif r == 2:
        cycle = P.boundary_cycle()
        for v, w in zip(cycle, cycle[1:] + cycle[:1]):
            normal = primitive((v[1] - w[1], w[0] - v[0]))
            rows.append((normal, -Fraction(pairing(v, normal))))
        rows.sort(key=cmp_to_key(lambda a, b: _ccw_compare(a[0], b[0])))
    else:
        normals, offsets, _ = _full_dim_facets(list(P.vertices))
        rows = sorted(zip(normals, offsets), key=lambda row: _facet_order(row[0]))
    return HalfspaceSystem.from_rows(r, rows)


def _is_unbounded(H: HalfspaceSystem) -> bool:
    """True when the recession cone {d : N d >= 0} has an extreme ray."""
    r = H.dim
    normals = H.normals
    for subset in itertools.combinations(normals, r - 1):
        if subset and rank(subset) != r - 1:
            continue
        for direction in nullspace(list(subset), r):
            for d in (direction, tuple(-x for x in direction)):
                if all(pairing(n, d) >= 0 for n in normals):
                    return True
    return False


def vertex_enumeration(H: HalfspaceSystem, guards: Guards = DEFAULT_GUARDS) -> RationalPolytope:
    """
    Exact vertices of the region cut out by a halfspace system.

    Every r-subset of rows is solved as an equality system; feasible
    solutions are the candidate vertices.

    Raises:
        UnboundedRegionError: the region contains a ray (or a line)
        EmptyRegionError: no point satisfies every row
    """
    r = H.dim
    require_dimension(r, guards)
    if not H.rows or rank(H.normals) < r:
        raise UnboundedRegionError("halfspace normals do not span the space")
    candidates = set()
    for subset in itertools.combinations(H.rows, r):
        point = solve([h.normal for h in subset], [-h.offset for h in subset])
        if point is not None and H.contains(point):
            candidates.add(point)
    if not candidates:
        raise EmptyRegionError("halfspace system has no feasible point")
    if _is_unbounded(H):
        raise UnboundedRegionError("halfspace system defines an unbounded region")
    return RationalPolytope(tuple(candidates))


def normal_fan_is_smooth(P: Polytope) -> bool:
    """True iff every vertex cone is spanned by a lattice basis of facet normals."""
    H = P.halfspaces
    r = P.dim
    for v in P.vertices:
        active = [h.normal for h in H.rows if h.slack(v) == 0]
        if len(active) != r or abs(det(active)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Lattice points
# ---------------------------------------------------------------------------

class _MembershipTest:
    """Exact integer constraints equivalent to membership in a polytope."""

    def __init__(self, equalities: np.ndarray, eq_rhs: np.ndarray, inequalities: np.ndarray, ineq_rhs: np.ndarray):
        self.equalities = equalities
        self.eq_rhs = eq_rhs
        self.inequalities = inequalities
        self.ineq_rhs = ineq_rhs

    @classmethod
    def of(cls, P: Polytope) -> "_MembershipTest":
        r = P.dim
        base = P.vertices[0]
        diffs = [[x - b for x, b in zip(v, base)] for v in P.vertices[1:]]
        eq_rows = nullspace(diffs, r) if diffs else nullspace([], r)
        eq_values = [pairing(e, base) for e in eq_rows]

        ineq_rows: List[List[Fraction]] = []
        ineq_values: List[Fraction] = []
        _, axes = _affine_frame(P.vertices)
        if axes:
            projected = convex_hull(tuple(v[i] for i in axes) for v in P.vertices)
            for h in facet_representation(projected).rows:
                row = [0] * r
                for axis, coeff in zip(axes, h.normal):
                    row[axis] = coeff
                ineq_rows.append(row)
                ineq_values.append(-h.offset)

        denom = reduce(lcm, (Fraction(x).denominator for x in eq_values + ineq_values), 1)
        return cls(
            np.array([[c * denom for c in row] for row in eq_rows], dtype=object).reshape(-1, r),
            np.array([int(Fraction(x) * denom) for x in eq_values], dtype=object),
            np.array([[c * denom for c in row] for row in ineq_rows], dtype=object).reshape(-1, r),
            np.array([int(Fraction(x) * denom) for x in ineq_values], dtype=object),
        )

    def mask(self, X: np.ndarray) -> np.ndarray:
        """Boolean membership of each row of an integer point array."""
        ok = np.ones(len(X), dtype=bool)
        if len(self.equalities):
            ok &= np.all(X.dot(self.equalities.T.astype(X.dtype)) == self.eq_rhs.astype(X.dtype), axis=1)
        if len(self.inequalities):
            ok &= np.all(X.dot(self.inequalities.T.astype(X.dtype)) >= self.ineq_rhs.astype(X.dtype), axis=1)
        return ok

    def contains_point(self, point: Sequence) -> bool:
        p = [Fraction(x) for x in point]
        return all(pairing(row, p) == rhs for row, rhs in zip(self.equalities, self.eq_rhs)) and all(
            pairing(row, p) >= rhs for row, rhs in zip(self.inequalities, self.ineq_rhs)
        )


def lattice_points(P: Polytope, guards: Guards = DEFAULT_GUARDS) -> List[LatticePoint]:
    """
    P ∩ Z^r in lexicographic order.

    Enumerates the integer bounding box slice by slice along the first axis
    and tests each point against the exact membership constraints.

    Raises:
        GuardExceededError: the bounding box holds more than guards.max_box points
    """
    r = P.dim
    require_dimension(r, guards)
    lo = [ceil(min(v[i] for v in P.vertices)) for i in range(r)]
    hi = [floor(max(v[i] for v in P.vertices)) for i in range(r)]
    if any(h < l for l, h in zip(lo, hi)):
        return []
    box = 1
    for l, h in zip(lo, hi):
        box *= h - l + 1
    if box > guards.max_box:
        raise GuardExceededError("max_box", box, guards.max_box)

    test = _MembershipTest.of(P)
    magnitude = max(max(abs(x) for x in lo + hi), 1)
    coeffs = [abs(int(x)) for x in np.concatenate([test.equalities.ravel(), test.inequalities.ravel()])]
    dtype = np.int64 if magnitude * max(coeffs, default=1) * r < (1 << 62) else object

    rest_shape = [h - l + 1 for l, h in zip(lo[1:], hi[1:])]
    if rest_shape:
        rest = np.indices(rest_shape).reshape(r - 1, -1).T + np.array(lo[1:])
    else:
        rest = np.zeros((1, 0), dtype=np.int64)
    rest = rest.astype(dtype)

    points: List[LatticePoint] = []
    for x0 in range(lo[0], hi[0] + 1):
        first = np.full((len(rest), 1), x0, dtype=dtype)
        X = np.hstack([first, rest])
        for row in X[test.mask(X)]:
            points.append(tuple(int(x) for x in row))
    return points


# ---------------------------------------------------------------------------
# Projections, widths, segments
# ---------------------------------------------------------------------------

def _axis_index(axis: int, r: int) -> int:
    if not 1 <= axis <= r:
        raise InputError(f"axis {axis} out of range 1..{r}")
    return axis - 1


def project(P: Polytope, drop_axis: int) -> Polytope:
    """Hull of the vertices with coordinate drop_axis (1-based) deleted."""
    if P.dim < 2:
        raise InputError("cannot project a one-dimensional polytope")
    i = _axis_index(drop_axis, P.dim)
    return type(P)(tuple(v[:i] + v[i + 1:] for v in P.vertices))


def width(P: Polytope, axis: int) -> Fraction:
    i = _axis_index(axis, P.dim)
    coords = [v[i] for v in P.vertices]
    return Fraction(max(coords) - min(coords))


def axis_segment(i: int, r: int) -> LatticePolytope:
    """Segment from -e_i to the origin in Z^r (1-based i)."""
    if r < 1:
        raise InputError(f"dimension must be at least 1, got {r}")
    index = _axis_index(i, r)
    return LatticePolytope((tuple(0 for _ in range(r)), tuple(-int(j == index) for j in range(r))))


def coordinate_box(sides: Sequence[int], anchor: Optional[Sequence[int]] = None) -> LatticePolytope:
    """Box prod [anchor_i, anchor_i + sides_i]."""
    anchor = anchor or [0] * len(sides)
    if any(s < 0 for s in sides):
        raise InputError(f"box sides must be nonnegative, got {list(sides)}")
    corners = itertools.product(*[(a, a + s) for a, s in zip(anchor, sides)])
    return LatticePolytope(tuple(corners))
