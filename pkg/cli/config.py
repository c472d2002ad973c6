"""
Run Configuration

Validated form of one command-line invocation. Argument parsing produces a
plain dict; RunConfig checks it and fills in environment defaults.
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, ValidationError, model_validator

from utils.config import Guards, default_log_dir, default_log_level
from utils.errors import InputError
from utils.logging_config import resolve_level

COMMANDS = ("params", "genmat", "distance", "verify-paper")


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["params", "genmat", "distance", "verify-paper"]
    polytope_path: Optional[Path] = None
    field_spec: Optional[str] = None
    out_path: Optional[Path] = None
    output_format: Literal["json", "csv", "text"] = "json"
    matrix_format: Literal["int", "log"] = "int"
    exact: bool = False
    bounds: bool = False
    multicyclic: bool = False
    limit: Optional[PositiveInt] = None
    jobs: Optional[PositiveInt] = None
    case: str = "all"
    log_level: str = Field(default_factory=default_log_level)
    log_dir: Optional[Path] = Field(default_factory=default_log_dir)
    guards: Guards = Field(default_factory=Guards)

    @model_validator(mode="before")
    @classmethod
    def _default_bounds(cls, values: dict) -> dict:
        # distance without --exact or --bounds computes the bounds only
        if values.get("command") == "distance" and not (values.get("exact") or values.get("bounds")):
            values = {**values, "bounds": True}
        return values

    @model_validator(mode="after")
    def _check_inputs(self) -> "RunConfig":
        if self.command != "verify-paper":
            if self.polytope_path is None:
                raise ValueError(f"{self.command} requires --polytope")
            if self.field_spec is None:
                raise ValueError(f"{self.command} requires --q or --field")
        resolve_level(self.log_level)
        return self


def build_config(values: dict) -> RunConfig:
    """RunConfig from parsed arguments, with validation failures as InputError."""
    try:
        return RunConfig(**values)
    except ValidationError as e:
        problems = "; ".join(err["msg"] for err in e.errors())
        raise InputError(f"invalid arguments: {problems}") from e
