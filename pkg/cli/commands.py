"""
Command Handlers

One function per CLI command. Each takes a validated RunConfig and returns
the result to render; errors propagate as ToricCodeError subclasses.
"""

from typing import Any, Dict

from codes import build_code, format_generator, kernel_pairs, multicyclic_check
from distance import analyze_distance
from fields import GaloisField, field_new, parse_field_spec
from geometry import LatticePolytope, lattice_points, load_polytope, normal_fan_is_smooth, pick_count
from services.paper_verification import VerificationReport, verify_paper
from utils.observability import get_logger, track_operation

from .config import RunConfig

logger = get_logger("cli")


def _inputs(config: RunConfig) -> tuple[LatticePolytope, GaloisField]:
    polytope = load_polytope(config.polytope_path)
    p, m = parse_field_spec(config.field_spec)
    return polytope, field_new(p, m, config.guards)


def cmd_params(config: RunConfig) -> Dict[str, Any]:
    """n, k, |P ∩ M|, injectivity and (in the plane) the Pick cross-check."""
    with track_operation("cli", "params"):
        polytope, field = _inputs(config)
        code = build_code(polytope, field, config.guards)
        count = code.lattice_point_count
        result: Dict[str, Any] = {
            "q": field.q,
            "r": code.r,
            "n": code.n,
            "k": code.k,
            "lattice_points": count,
            "injective": count == code.k,
            "kernel_pairs": len(kernel_pairs(code.reduced_set)),
            "full_dimensional": polytope.is_full_dimensional,
            "field": {
                "p": field.p,
                "m": field.m,
                "modulus": list(field.modulus),
                "generator": field.generator,
            },
        }
        if polytope.is_full_dimensional:
            result["smooth_fan"] = normal_fan_is_smooth(polytope)
            if polytope.dim == 2:
                result["pick_count"] = pick_count(polytope)
                result["pick_consistent"] = result["pick_count"] == len(lattice_points(polytope, config.guards))
        if config.multicyclic:
            result["multicyclic"] = multicyclic_check(code)
    return result


def cmd_genmat(config: RunConfig) -> str:
    """Generator matrix file contents."""
    with track_operation("cli", "genmat", {"format": config.matrix_format}):
        polytope, field = _inputs(config)
        code = build_code(polytope, field, config.guards)
        return format_generator(code, config.matrix_format)


def cmd_distance(config: RunConfig) -> Dict[str, Any]:
    """DistanceReport for the requested subset of exact value and bounds."""
    with track_operation("cli", "distance", {"exact": config.exact, "bounds": config.bounds}):
        polytope, field = _inputs(config)
        code = build_code(polytope, field, config.guards)
        report = analyze_distance(
            code,
            exact=config.exact,
            bounds=config.bounds,
            limit=config.limit,
            jobs=config.jobs,
            guards=config.guards,
        )
    return report.to_dict()


def cmd_verify_paper(config: RunConfig) -> VerificationReport:
    with track_operation("cli", "verify_paper", {"case": config.case}):
        report = verify_paper(config.case, guards=config.guards, jobs=config.jobs, limit=config.limit)
    logger.info("Verification finished", **report.summary)
    return report
