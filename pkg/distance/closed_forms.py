"""
Closed Forms and Conjecture Checks

Parameters of the hypercube family, the dimension recursion for its
distance, and mechanical checks of two published minimum-distance
conjectures on small triangles.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

from codes import build_code
from fields import field_new, split_prime_power
from geometry import LatticePolytope, lattice_points, volume
from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import InputError

from .exhaustive import exact_min_distance

# Triangles of the two conjecture checks
WINDOW_TRIANGLE = LatticePolytope(((0, 0), (1, 1), (0, 2)))
UNIT_TRIANGLE = LatticePolytope(((0, 0), (1, 0), (0, 1)))


def _check_sides(b: Sequence[int], q: int) -> None:
    if not b:
        raise InputError("hypercube needs at least one side")
    if any(x < 0 or x >= q - 1 for x in b):
        raise InputError(f"hypercube sides must lie in [0, q-2] = [0, {q - 2}], got {list(b)}")


def hypercube_params(b: Sequence[int], q: int) -> Tuple[int, int, int]:
    """[n, k, d] = [(q-1)^r, prod(b_i+1), prod(q-1-b_i)]."""
    _check_sides(b, q)
    n1 = q - 1
    return n1 ** len(b), prod(x + 1 for x in b), prod(n1 - x for x in b)


def hypercube_recursion(b: Sequence[int], q: int) -> List[int]:
    """
    Distances d_2, ..., d_r from
    d_r = (q-1)^r - ((q-1)^(r-1) - d_(r-1))(q-1-b_r) - b_r (q-1)^(r-1).
    """
    _check_sides(b, q)
    if len(b) < 2:
        raise InputError("the recursion starts in dimension 2")
    n1 = q - 1
    d = n1 - b[0]
    values = []
    for r in range(2, len(b) + 1):
        br = b[r - 1]
        d = n1 ** r - (n1 ** (r - 1) - d) * (n1 - br) - br * n1 ** (r - 1)
        values.append(d)
    return values


@dataclass
class ConjectureReport:
    """Outcome of one conjecture check."""

    name: str
    q: int
    vertices: List[List[int]]
    n: int
    k: int
    lattice_points: int
    conjectured_bound: int
    premise_holds: bool
    exact: Optional[int] = None
    refuted: bool = False
    details: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _field_for(q: int, guards: Guards):
    p, m = split_prime_power(q)
    return field_new(p, m, guards)


def joyner_42_check(
    q: int,
    limit: Optional[int] = None,
    jobs: Optional[int] = 1,
    guards: Guards = DEFAULT_GUARDS
) -> ConjectureReport:
    """
    Check the claim d >= n - 2N vol(P) with N = q - 2 on the triangle
    (0,0),(1,1),(0,2), whose premise is 2N vol <= n <= 2N^2 vol.

    The exact distance is only computed when the premise holds.
    """
    field = _field_for(q, guards)
    P = WINDOW_TRIANGLE
    N = q - 2
    vol = volume(P, guards)
    n = (q - 1) ** 2
    premise = 2 * N * vol <= n <= 2 * N * N * vol and N > 1
    bound = n - int(2 * N * vol)

    code = build_code(P, field, guards)
    report = ConjectureReport(
        name="joyner42",
        q=q,
        vertices=[list(v) for v in P.vertices],
        n=code.n,
        k=code.k,
        lattice_points=len(lattice_points(P, guards)),
        conjectured_bound=bound,
        premise_holds=premise,
        details={"N": N, "volume": str(Fraction(vol)), "window": [int(2 * N * vol), n, int(2 * N * N * vol)]},
    )
    if premise:
        report.exact = exact_min_distance(code, limit=limit, jobs=jobs, guards=guards).distance
        report.refuted = bound > report.exact
    return report


def joyner_43_check(
    q: int,
    limit: Optional[int] = None,
    jobs: Optional[int] = 1,
    guards: Guards = DEFAULT_GUARDS
) -> ConjectureReport:
    """
    Check the claim d >= n - r! #(P ∩ M) on the unit triangle, together with
    its side conditions n > r! #(P ∩ M) and k = #(P ∩ M).
    """
    if q < 3:
        raise InputError("the unit-triangle check needs q >= 3")
    field = _field_for(q, guards)
    P = UNIT_TRIANGLE
    r = P.dim
    count = len(lattice_points(P, guards))
    code = build_code(P, field, guards)
    bound = code.n - factorial(r) * count
    exact = exact_min_distance(code, limit=limit, jobs=jobs, guards=guards).distance
    return ConjectureReport(
        name="joyner43",
        q=q,
        vertices=[list(v) for v in P.vertices],
        n=code.n,
        k=code.k,
        lattice_points=count,
        conjectured_bound=bound,
        premise_holds=code.n > factorial(r) * count,
        exact=exact,
        refuted=bound > exact,
        details={"k_equals_point_count": code.k == count, "claimed_for_q_at_least": 8},
    )
