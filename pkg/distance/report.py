"""
Distance Report

Collects the exact minimum distance and/or the two bounds for one code and
checks that they are consistent.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from codes import ToricCode
from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import InternalInvariantError
from utils.observability import track_operation

from .exhaustive import exact_min_distance
from .lower_bound import intersection_lower_bound
from .upper_bound import box_upper_bound


@dataclass
class DistanceReport:
    """Exact distance and bounds with witnesses; absent values are None."""

    n: int
    k: int
    exact: Optional[int] = None
    lower_bound: Optional[int] = None
    refined_lower_bound: Optional[int] = None
    upper_bound: Optional[int] = None
    lower_witness: Optional[Dict[str, Any]] = None
    upper_witness: Optional[Dict[str, Any]] = None
    exact_witness: Optional[Dict[str, Any]] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def trivial_lower(self) -> bool:
        return self.lower_bound is not None and self.lower_bound <= 0

    @property
    def effective_lower(self) -> Optional[int]:
        """The best lower bound clamped to at least 1."""
        candidates = [b for b in (self.lower_bound, self.refined_lower_bound) if b is not None]
        return max([1] + candidates) if candidates else None

    def check(self) -> None:
        """Raise if the values contradict lower <= exact <= upper."""
        lower = self.effective_lower
        if self.exact is not None:
            if lower is not None and lower > self.exact:
                raise InternalInvariantError(f"lower bound {lower} exceeds exact distance {self.exact}")
            if self.upper_bound is not None and self.exact > self.upper_bound:
                raise InternalInvariantError(f"exact distance {self.exact} exceeds upper bound {self.upper_bound}")
        if lower is not None and self.upper_bound is not None and lower > self.upper_bound:
            raise InternalInvariantError(f"lower bound {lower} exceeds upper bound {self.upper_bound}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        result: Dict[str, Any] = {"n": self.n, "k": self.k}
        for key in ("exact", "lower_bound", "refined_lower_bound", "upper_bound"):
            value = getattr(self, key)
            if value is not None:
                result[key] = value
        if self.lower_bound is not None:
            result["effective_lower_bound"] = self.effective_lower
        result["trivial_lower"] = self.trivial_lower
        result["witnesses"] = {
            name: value
            for name, value in (
                ("lower", self.lower_witness),
                ("upper", self.upper_witness),
                ("exact", self.exact_witness),
            )
            if value is not None
        }
        if self.notes:
            result["notes"] = self.notes
        return result


def analyze_distance(
    code: ToricCode,
    exact: bool = False,
    bounds: bool = True,
    limit: Optional[int] = None,
    jobs: Optional[int] = None,
    guards: Guards = DEFAULT_GUARDS
) -> DistanceReport:
    """
    Compute the requested parts of a DistanceReport.

    Args:
        code: built toric code
        exact: run the exhaustive search
        bounds: compute the intersection lower bound and the box upper bound
        limit: message limit for the exhaustive search
        jobs: worker processes for the exhaustive search
    """
    report = DistanceReport(n=code.n, k=code.k)
    q = code.field.q

    with track_operation("distance", "analyze_distance", {"q": q, "k": code.k, "exact": exact, "bounds": bounds}):
        if bounds:
            lower = intersection_lower_bound(code.polytope, q, guards)
            report.lower_bound = lower.bound
            report.refined_lower_bound = lower.refined_bound
            report.lower_witness = lower.to_dict()

            upper = box_upper_bound(code.polytope, q, guards)
            report.upper_bound = upper.bound
            report.upper_witness = upper.to_dict()

        if exact:
            result = exact_min_distance(code, limit=limit, jobs=jobs, guards=guards)
            report.exact = result.distance
            report.exact_witness = {"message": list(result.message)}

        report.check()
    return report
