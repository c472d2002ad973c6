"""
Command-Line Application

Subcommands:
    params        code parameters (n, k, lattice point count, injectivity)
    genmat        generator matrix in integer or discrete-log form
    distance      exact minimum distance and/or the lower and upper bounds
    verify-paper  replication suite; exit 0 iff every check passes

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size guard
exceeded, 4 I/O error, 5 internal invariant violated. Results go to stdout
(or --out); diagnostics go to stderr.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

from services.paper_verification import CASES
from utils.errors import InternalInvariantError, ToricCodeError
from utils.logging_config import setup_logging
from utils.observability import get_logger

from .commands import cmd_distance, cmd_genmat, cmd_params, cmd_verify_paper
from .config import RunConfig, build_config
from .output import render, write_output

logger = get_logger("cli")

_GUARD_FLAGS = ("max_field", "max_torus", "max_box", "message_limit", "box_search_limit", "max_dim")


# ============================================================================
# ARGUMENT PARSING
# ============================================================================

def _add_common(parser: argparse.ArgumentParser, needs_code: bool = True) -> None:
    if needs_code:
        parser.add_argument("--polytope", dest="polytope_path", required=True, help="Polytope JSON file")
        field = parser.add_mutually_exclusive_group(required=True)
        field.add_argument("--q", type=int, help="Field size (prime power)")
        field.add_argument("--field", dest="field_spec", help="Field as p=<int>,m=<int>")
    parser.add_argument("--out", dest="out_path", help="Write the result here instead of stdout")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-dir", dest="log_dir", help="Also log to a timestamped file here")
    guards = parser.add_argument_group("size guards")
    for name in _GUARD_FLAGS:
        guards.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-codes",
        description="Toric codes from lattice polytopes over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    params = sub.add_parser("params", help="Code length, dimension and injectivity")
    _add_common(params)
    params.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default="json")
    params.add_argument("--multicyclic", action="store_true", help="Also check shift invariance")

    genmat = sub.add_parser("genmat", help="Generator matrix")
    _add_common(genmat)
    genmat.add_argument("--format", dest="matrix_format", choices=("int", "log"), default="int")

    distance = sub.add_parser("distance", help="Minimum distance and bounds")
    _add_common(distance)
    distance.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default="json")
    distance.add_argument("--exact", action="store_true", help="Exhaustive search over all messages")
    distance.add_argument("--bounds", action="store_true", help="Intersection and box bounds")
    distance.add_argument("--limit", type=int, help="Refuse exact search above this many messages")
    distance.add_argument("--jobs", type=int, help="Worker processes for the exact search")

    verify = sub.add_parser("verify-paper", help="Replication suite")
    _add_common(verify, needs_code=False)
    verify.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default="json")
    verify.add_argument("--case", choices=CASES + ("all",), default="all")
    verify.add_argument("--limit", type=int, help="Refuse exact searches above this many messages")
    verify.add_argument("--jobs", type=int, help="Worker processes for the exact searches")

    return parser


def _to_config(args: argparse.Namespace) -> RunConfig:
    values: Dict[str, Any] = {k: v for k, v in vars(args).items() if v is not None}
    q = values.pop("q", None)
    if q is not None:
        values["field_spec"] = f"q={q}"
    overrides = {name: values.pop(name) for name in _GUARD_FLAGS if name in values}
    if overrides:
        values["guards"] = overrides
    return build_config(values)


# ============================================================================
# ENTRY POINT
# ============================================================================

def run(config: RunConfig) -> int:
    """Execute one validated command and emit its result."""
    if config.command == "verify-paper":
        report = cmd_verify_paper(config)
        text = render(report.to_dict(), config.output_format)
        if not report.passed:
            # failing checks are diagnostics, not a result
            sys.stderr.write(text)
            return 1
    elif config.command == "genmat":
        text = cmd_genmat(config)
    elif config.command == "params":
        text = render(cmd_params(config), config.output_format)
    else:
        text = render(cmd_distance(config), config.output_format)

    write_output(text, config.out_path, sys.stdout)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run the command and map failures to exit codes.

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = _to_config(args)
        setup_logging(
            config.log_level,
            log_to_file=config.log_dir is not None,
            log_dir=str(config.log_dir or "logs"),
            command=config.command,
        )
        logger.debug("Running command", command=config.command)
        return run(config)
    except ToricCodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:  # noqa: BLE001
        print(f"error: {InternalInvariantError(str(e))}", file=sys.stderr)
        return InternalInvariantError.exit_code


if __name__ == "__main__":
    sys.exit(main())
