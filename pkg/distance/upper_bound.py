"""
Box Upper Bound

If the reduced exponent set contains (up to translation mod q-1) a box
prod {0..l_i}, the code contains the evaluations of
prod_i prod_{j <= l_i} (t_i - g^{e_ij}), which vanish on all but
prod (q-1-l_i) torus points. So d <= min prod (q-1-l_i) over admissible boxes.
"""

import itertools
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, Iterable, List, Tuple

import numpy as np

from codes import reduced_set
from geometry import LatticePolytope
from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import GuardExceededError, InternalInvariantError
from utils.observability import get_logger

logger = get_logger("distance")


@dataclass
class UpperBound:
    """Best box found: anchor u in {0..q-2}^r and side lengths l."""

    bound: int
    anchor: Tuple[int, ...]
    lengths: Tuple[int, ...]
    shapes_examined: int
    degraded: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound": self.bound,
            "u": list(self.anchor),
            "l": list(self.lengths),
            "shapes_examined": self.shapes_examined,
            "degraded": self.degraded,
        }


def reduced_mask(P: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> np.ndarray:
    """Boolean array over {0..q-2}^r marking reduced exponents of P."""
    r = P.dim
    cells = (q - 1) ** r
    if cells > guards.max_torus:
        raise GuardExceededError("max_torus", cells, guards.max_torus)
    mask = np.zeros((q - 1,) * r, dtype=bool)
    for cls in reduced_set(P, q, guards):
        mask[cls.c] = True
    return mask


def admissible_anchors(mask: np.ndarray, lengths: Tuple[int, ...]) -> np.ndarray:
    """Anchors u with every cell of u + prod{0..l_i} (cyclically) in the mask."""
    window = mask
    for axis, length in enumerate(lengths):
        covered = window.copy()
        for j in range(1, length + 1):
            covered &= np.roll(window, -j, axis=axis)
        window = covered
    return np.argwhere(window)


def _shape_order(n1: int, r: int, shapes: Iterable[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Increasing prod(n1 - l_i); ties favor lexicographically larger l."""
    return sorted(shapes, key=lambda l: (prod(n1 - x for x in l), tuple(-x for x in l)))


def box_upper_bound(P: LatticePolytope, q: int, guards: Guards = DEFAULT_GUARDS) -> UpperBound:
    """
    Smallest prod(q-1-l_i) over boxes whose reduction lies in the reduced set.

    Shapes are examined best-first, so the first admissible one is optimal.
    When the number of shapes exceeds guards.box_search_limit, only boxes with
    at most one nonzero side are searched.
    """
    r = P.dim
    n1 = q - 1
    mask = reduced_mask(P, q, guards)

    total_shapes = n1 ** r
    degraded = total_shapes > guards.box_search_limit
    if degraded:
        shapes = {tuple(0 for _ in range(r))}
        for axis in range(r):
            for length in range(1, n1):
                shapes.add(tuple(length if i == axis else 0 for i in range(r)))
        logger.warning("Box search degraded to segments", shapes=total_shapes, limit=guards.box_search_limit)
    else:
        shapes = itertools.product(range(n1), repeat=r)

    examined = 0
    for lengths in _shape_order(n1, r, shapes):
        examined += 1
        anchors = admissible_anchors(mask, lengths)
        if len(anchors):
            anchor = tuple(int(x) for x in anchors[0])
            bound = prod(n1 - x for x in lengths)
            logger.debug("Box found", bound=bound, u=anchor, l=lengths, examined=examined)
            return UpperBound(bound, anchor, tuple(lengths), examined, degraded)

    raise InternalInvariantError("no admissible box, not even a single point")
