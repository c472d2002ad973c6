"""
Toric Codes

The code C_P of a lattice polytope P over GF(q): monomials chi^u for
u in P ∩ Z^r evaluated at every point of the torus (F_q*)^r. Exponents that
agree modulo q - 1 give the same evaluation vector, so the code is spanned by
one row per reduced exponent class.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from fields import GaloisField, monomial_row, torus_log_matrix
from geometry import LatticePoint, LatticePolytope, lattice_points
from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import InputError, InternalInvariantError
from utils.observability import get_logger, track_operation

from .linear_algebra import matrix_rank

logger = get_logger("codes")


@dataclass(frozen=True)
class ReducedExponent:
    """An exponent c in {0..q-2}^r and the lattice points that reduce to it."""

    c: LatticePoint
    sources: Tuple[LatticePoint, ...]

    @property
    def representative(self) -> LatticePoint:
        return self.sources[0]

    def lifts(self) -> List[LatticePoint]:
        """b_u = u - c for every source u."""
        return [tuple(x - y for x, y in zip(u, self.c)) for u in self.sources]


@dataclass(frozen=True)
class KernelBasis:
    """Pairs (u, u') spanning the kernel of the evaluation map via chi^u - chi^u'."""

    pairs: Tuple[Tuple[LatticePoint, LatticePoint], ...]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True, eq=False)
class ToricCode:
    """
    A built toric code.

    Attributes:
        field: the coefficient field
        polytope: P
        reduced_set: reduced exponent classes, lexicographic by c
        generator: k x n matrix of field encodings, row i = chi^{c_i} on the torus
    """

    field: GaloisField
    polytope: LatticePolytope
    reduced_set: Tuple[ReducedExponent, ...]
    generator: np.ndarray

    @property
    def r(self) -> int:
        return self.polytope.dim

    @property
    def n(self) -> int:
        return int(self.generator.shape[1])

    @property
    def k(self) -> int:
        return len(self.reduced_set)

    @property
    def lattice_point_count(self) -> int:
        return sum(len(cls.sources) for cls in self.reduced_set)


def reduce_exponent(u: Sequence[int], q: int) -> LatticePoint:
    """The representative of u modulo q - 1 in {0, ..., q-2}^r."""
    if q < 2:
        raise InputError(f"q must be at least 2, got {q}")
    return tuple(x % (q - 1) for x in u)


def classify_exponents(points: Iterable[Sequence[int]], q: int) -> Tuple[ReducedExponent, ...]:
    """Group lattice points by reduced exponent; sources and classes sorted."""
    classes: Dict[LatticePoint, List[LatticePoint]] = defaultdict(list)
    for u in points:
        u = tuple(u)
        classes[reduce_exponent(u, q)].append(u)
    return tuple(
        ReducedExponent(c, tuple(sorted(sources))) for c, sources in sorted(classes.items())
    )


def reduced_set(P: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> Tuple[ReducedExponent, ...]:
    return classify_exponents(lattice_points(P, guards), q)


def kernel_pairs(classes: Iterable[ReducedExponent]) -> KernelBasis:
    return KernelBasis(
        tuple((u, cls.representative) for cls in classes for u in cls.sources[1:])
    )


def kernel_basis(P: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> KernelBasis:
    """Each non-representative source paired with its class representative."""
    return kernel_pairs(reduced_set(P, q, guards))


def injectivity_check(P: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff no two lattice points of P share a reduced exponent."""
    return all(len(cls.sources) == 1 for cls in reduced_set(P, q, guards))


def same_code(P: LatticePolytope, other: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff both polytopes have the same reduced exponent set, hence the same code."""
    if P.dim != other.dim:
        return False
    mine = [cls.c for cls in reduced_set(P, q, guards)]
    theirs = [cls.c for cls in reduced_set(other, q, guards)]
    return mine == theirs


def build_code(P: LatticePolytope, field: GaloisField, guards: Guards = DEFAULT_GUARDS) -> ToricCode:
    """
    Build C_P over the field.

    Raises:
        InputError: P lives in dimension 1
        GuardExceededError: torus or lattice-point box too large
        InternalInvariantError: the generator rows are not independent
    """
    r = P.dim
    if r < 2:
        raise InputError("toric codes need dimension r >= 2")

    with track_operation("codes", "build_code", {"q": field.q, "r": r}):
        logs = torus_log_matrix(field, r, guards)
        classes = reduced_set(P, field.q, guards)
        generator = np.vstack([monomial_row(field, cls.c, logs) for cls in classes])
        generator.setflags(write=False)

        rank = matrix_rank(generator, field)
        if rank != len(classes):
            raise InternalInvariantError(
                f"generator rank {rank} differs from the number of reduced exponents {len(classes)}"
            )
        logger.info("Code built", n=generator.shape[1], k=len(classes))

    return ToricCode(field, P, classes, generator)


def multicyclic_check(code: ToricCode) -> bool:
    """
    True iff the code is invariant under t_i -> g t_i for every axis i.

    On the canonical coordinate order that substitution is a cyclic shift of
    the i-th log coordinate.
    """
    shape = (code.k,) + (code.field.order,) * code.r
    cube = code.generator.reshape(shape)
    for axis in range(code.r):
        shifted = np.roll(cube, -1, axis=axis + 1).reshape(code.k, -1)
        if matrix_rank(np.vstack([code.generator, shifted]), code.field) != code.k:
            return False
    return True
