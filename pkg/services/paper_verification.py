"""
Verification Service - Replication Suite for Toric Code Results

This service mechanically re-derives published toric code results:
1. Hypercube family - parameters, exact distance and both bounds
2. Hexagon - dimension, bounds, exact distance baseline, shifted-polygon vertices
3. Window conjecture - counterexample on the triangle (0,0),(1,1),(0,2)
4. Point-count conjecture - counterexample on the unit triangle
5. Pick's formula - random lattice polygons

Each case produces PASS/FAIL validation results; the suite passes iff no
result fails.
"""

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from math import prod
from typing import Any, Callable, Dict, List, Optional, Sequence

from codes import build_code, multicyclic_check
from distance import (
    analyze_distance,
    hypercube_params,
    hypercube_recursion,
    joyner_42_check,
    joyner_43_check,
)
from fields import field_new, split_prime_power
from geometry import (
    LatticePolytope,
    axis_segment,
    convex_hull,
    coordinate_box,
    divisor_shift_system,
    lattice_points,
    minkowski_sum,
    mixed_volume,
    pick_count,
    vertex_enumeration,
    volume,
)
from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import InputError
from utils.observability import get_logger, track_operation

logger = get_logger("verification")

CASES = ("hypercube", "hexagon", "joyner42", "joyner43", "pick")

# Exact distance of the b=1 hexagon code over GF(5), from exhaustive search
HEXAGON_BASELINE = 6


class ValidationLevel(Enum):
    """Validation outcome"""
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass
class ValidationResult:
    """Single verification check result"""
    category: str
    check_name: str
    level: ValidationLevel
    message: str
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass
class VerificationReport:
    """Outcome of one or more verification cases"""
    validation_results: List[ValidationResult]
    summary: Dict[str, Any]

    @property
    def passed(self) -> bool:
        return all(vr.level == ValidationLevel.PASS for vr in self.validation_results)

    def to_dict(self) -> Dict:
        """Convert to dictionary for JSON serialization"""
        return {
            "passed": self.passed,
            "validation_results": [
                {
                    "category": vr.category,
                    "check_name": vr.check_name,
                    "level": vr.level.value,
                    "message": vr.message,
                    "details": vr.details
                }
                for vr in self.validation_results
            ],
            "summary": self.summary
        }


def hexagon(b: int) -> LatticePolytope:
    return LatticePolytope(((0, 0), (b, 0), (2 * b, b), (2 * b, 2 * b), (b, 2 * b), (0, b)))


def _field_for(q: int, guards: Guards):
    p, m = split_prime_power(q)
    return field_new(p, m, guards)


class PaperVerificationService:
    """
    Replication suite over the five verification cases.

    Thresholds control how much brute force the suite is allowed to do.
    """

    def __init__(
        self,
        guards: Guards = DEFAULT_GUARDS,
        jobs: Optional[int] = 1,
        limit: Optional[int] = None,
        seed: int = 20240601
    ):
        """Initialize the suite with its thresholds"""
        self.guards = guards
        self.jobs = jobs
        self.limit = limit
        self.seed = seed
        self.thresholds = {
            "hypercube_fields": (3, 4, 5),
            "hypercube_dims": (2, 3),
            "hypercube_max_messages": 10**7,  # q^k cap for exhaustive checks
            "hexagon_sides": (1, 2, 3),  # shifted-vertex area check
            "pick_samples": 200,
            "pick_box": 12,
        }
        self._cases: Dict[str, Callable[[], List[ValidationResult]]] = {
            "hypercube": self._verify_hypercube,
            "hexagon": self._verify_hexagon,
            "joyner42": self._verify_joyner42,
            "joyner43": self._verify_joyner43,
            "pick": self._verify_pick,
        }

    def run(self, case: str = "all") -> VerificationReport:
        """
        Run one case or all of them.

        Args:
            case: one of CASES or "all"

        Returns:
            VerificationReport with every check result and a summary
        """
        if case != "all" and case not in self._cases:
            raise InputError(f"unknown verification case '{case}', expected one of {CASES + ('all',)}")
        selected = CASES if case == "all" else (case,)

        validation_results: List[ValidationResult] = []
        for name in selected:
            with track_operation("verification", name):
                validation_results.extend(self._cases[name]())

        summary = self._generate_summary(validation_results, selected)
        return VerificationReport(validation_results=validation_results, summary=summary)

    @staticmethod
    def _check(category: str, check_name: str, ok: bool, message: str, **details) -> ValidationResult:
        level = ValidationLevel.PASS if ok else ValidationLevel.FAIL
        if not ok:
            logger.warning("Check failed", category=category, check=check_name, **details)
        return ValidationResult(category, check_name, level, message, details)

    # =========================================================================
    # CASE 1: HYPERCUBE FAMILY
    # =========================================================================

    def _hypercube_sides(self, q: int, r: int) -> List[Sequence[int]]:
        cap = self.thresholds["hypercube_max_messages"]
        return [
            b for b in itertools.product(range(q - 1), repeat=r)
            if q ** prod(x + 1 for x in b) <= cap
        ]

    def _verify_hypercube(self) -> List[ValidationResult]:
        """
        Every box with sides below q-1 has parameters
        [(q-1)^r, prod(b_i+1), prod(q-1-b_i)], both bounds are tight, and the
        dimension recursion reproduces the distance.
        """
        results = []
        for q in self.thresholds["hypercube_fields"]:
            field_ = _field_for(q, self.guards)
            for r in self.thresholds["hypercube_dims"]:
                for b in self._hypercube_sides(q, r):
                    n, k, d = hypercube_params(b, q)
                    code = build_code(coordinate_box(b), field_, self.guards)
                    report = analyze_distance(
                        code, exact=True, bounds=True, limit=self.limit, jobs=self.jobs, guards=self.guards
                    )
                    recursion = hypercube_recursion(b, q)[-1]
                    ok = (
                        (code.n, code.k, report.exact) == (n, k, d)
                        and report.lower_bound == d
                        and report.upper_bound == d
                        and recursion == d
                        and multicyclic_check(code)
                    )
                    results.append(self._check(
                        "hypercube",
                        f"q={q} b={list(b)}",
                        ok,
                        f"[{code.n}, {code.k}, {report.exact}] vs closed form [{n}, {k}, {d}]",
                        lower=report.lower_bound,
                        upper=report.upper_bound,
                        recursion=recursion,
                    ))
        return results

    # =========================================================================
    # CASE 2: HEXAGON
    # =========================================================================

    def _verify_hexagon(self) -> List[ValidationResult]:
        """b = 1 over GF(5): k = 7, lower 4 < upper 8 < square-box value 9, exact distance baseline."""
        results = []
        b, q = 1, 5
        n1 = q - 1
        P = hexagon(b)
        code = build_code(P, _field_for(q, self.guards), self.guards)
        report = analyze_distance(code, exact=True, bounds=True, limit=self.limit, jobs=self.jobs, guards=self.guards)

        expected_lower = n1 ** 2 - 4 * b * n1 + 4 * b * b
        expected_upper = n1 ** 2 - 2 * b * n1
        square_value = n1 ** 2 - (2 * b * n1 - b * b)

        results.append(self._check(
            "hexagon", "dimension", code.k == 3 * b * b + 3 * b + 1 == 7,
            f"k = {code.k}", n=code.n,
        ))
        results.append(self._check(
            "hexagon", "lower bound", report.lower_bound == expected_lower,
            f"lower bound {report.lower_bound}, expected {expected_lower}",
            witness=report.lower_witness,
        ))
        results.append(self._check(
            "hexagon", "upper bound", report.upper_bound == expected_upper,
            f"upper bound {report.upper_bound}, expected {expected_upper}",
            witness=report.upper_witness,
        ))
        results.append(self._check(
            "hexagon", "bound chain", report.lower_bound < report.upper_bound < square_value,
            f"{report.lower_bound} < {report.upper_bound} < {square_value}",
        ))
        results.append(self._check(
            "hexagon", "exact distance",
            report.lower_bound <= report.exact <= report.upper_bound and report.exact == HEXAGON_BASELINE,
            f"exact distance {report.exact}, baseline {HEXAGON_BASELINE}",
            refined_lower=report.refined_lower_bound,
        ))
        results.append(self._check(
            "hexagon", "multicyclic", multicyclic_check(code), "code invariant under torus shifts",
        ))

        for side in self.thresholds["hexagon_sides"]:
            results.extend(self._hexagon_geometry(side))
        return results

    def _hexagon_geometry(self, b: int) -> List[ValidationResult]:
        """Mixed volume, Minkowski area, Pick count and shifted vertices for side b."""
        P = hexagon(b)
        segment = axis_segment(1, 2)
        results = [
            self._check(
                "hexagon", f"b={b} mixed volume", 2 * mixed_volume([P, segment]) == 2 * b,
                f"2 V(P, segment) = {2 * mixed_volume([P, segment])}",
            ),
            self._check(
                "hexagon", f"b={b} Minkowski area", volume(minkowski_sum(P, segment)) == 3 * b * b + 2 * b,
                f"area of P + segment = {volume(minkowski_sum(P, segment))}",
            ),
            self._check(
                "hexagon", f"b={b} Pick", pick_count(P) == len(lattice_points(P, self.guards)) == 3 * b * b + 3 * b + 1,
                f"Pick count {pick_count(P)}",
            ),
        ]

        H = P.halfspaces
        for a in range(b + 1):
            shifted = vertex_enumeration(divisor_shift_system(H, (1, 0), a))
            expected = convex_hull([(a, 0), (b, 0), (2 * b, b), (2 * b, 2 * b), (b + a, 2 * b), (a, b)])
            listed = convex_hull([(a, 0), (b, 0), (2 * b, b), (2 * b, 2 * b), (b + a, 2 * b), (a, b - a)])
            area = volume(shifted)
            results.append(self._check(
                "hexagon",
                f"b={b} a={a} shifted polygon",
                shifted.vertices == expected.vertices and area == 3 * b * b - 2 * a * b,
                f"vertex (a, b) gives area {area} = 3b^2 - 2ab",
                printed_vertex_area=str(volume(listed)),
                printed_vertex_consistent=volume(listed) == 3 * b * b - 2 * a * b,
            ))
        return results

    # =========================================================================
    # CASES 3-4: CONJECTURE COUNTEREXAMPLES
    # =========================================================================

    def _verify_joyner42(self) -> List[ValidationResult]:
        """d = (q-1)^2 - 2(q-1) beats the conjectured n - 2(q-2) vol(P)."""
        results = []
        for q in (5, 7):
            report = joyner_42_check(q, limit=self.limit, jobs=self.jobs, guards=self.guards)
            expected = (q - 1) ** 2 - 2 * (q - 1)
            results.append(self._check(
                "joyner42", f"q={q}",
                report.premise_holds and report.exact == expected and report.refuted,
                f"conjectured bound {report.conjectured_bound} > exact {report.exact}",
                **report.to_dict(),
            ))
        report = joyner_42_check(4, limit=self.limit, jobs=self.jobs, guards=self.guards)
        results.append(self._check(
            "joyner42", "q=4 premise", not report.premise_holds,
            f"window {report.details['window']} does not contain n; the claim does not apply",
        ))
        return results

    def _verify_joyner43(self) -> List[ValidationResult]:
        """d = (q-1)^2 - (q-1) beats n - 2 * 3 for q >= 8 and not below."""
        results = []
        for q, refuted in ((8, True), (9, True), (5, False)):
            report = joyner_43_check(q, limit=self.limit, jobs=self.jobs, guards=self.guards)
            expected = (q - 1) ** 2 - (q - 1)
            results.append(self._check(
                "joyner43", f"q={q}",
                report.k == report.lattice_points == 3 and report.exact == expected and report.refuted == refuted,
                f"conjectured bound {report.conjectured_bound}, exact {report.exact}, refuted={report.refuted}",
                **report.to_dict(),
            ))
        return results

    # =========================================================================
    # CASE 5: PICK'S FORMULA
    # =========================================================================

    def _verify_pick(self) -> List[ValidationResult]:
        """Area + boundary/2 + 1 equals the lattice-point count on random polygons."""
        rng = random.Random(self.seed)
        side = self.thresholds["pick_box"]
        mismatches = []
        checked = 0
        while checked < self.thresholds["pick_samples"]:
            points = [(rng.randint(0, side), rng.randint(0, side)) for _ in range(rng.randint(3, 9))]
            P = convex_hull(points)
            if not P.is_full_dimensional:
                continue
            checked += 1
            count = len(lattice_points(P, self.guards))
            if pick_count(P) != count:
                mismatches.append({"vertices": [list(v) for v in P.vertices], "pick": pick_count(P), "count": count})
        return [self._check(
            "pick", f"{checked} random polygons", not mismatches,
            f"{len(mismatches)} mismatches", mismatches=mismatches[:5],
        )]

    def _generate_summary(self, validation_results: List[ValidationResult], cases: Sequence[str]) -> Dict[str, Any]:
        """Generate validation summary"""
        failed = [vr for vr in validation_results if vr.level == ValidationLevel.FAIL]
        return {
            "cases": list(cases),
            "total_checks": len(validation_results),
            "passed": len(validation_results) - len(failed),
            "failed": len(failed),
            "failed_checks": [f"{vr.category}: {vr.check_name}" for vr in failed],
        }


def verify_paper(case: str = "all", **kwargs) -> VerificationReport:
    """
    Convenience function to run the replication suite.

    Usage:
        report = verify_paper("hexagon", jobs=4)
        if not report.passed:
            ...
    """
    return PaperVerificationService(**kwargs).run(case)
