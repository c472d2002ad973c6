"""
Polytope JSON

The only serialized form of a polytope: {"vertices": [[int, ...], ...]}.
"""

import json
from pathlib import Path
from typing import List

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError, field_validator

from utils.errors import InputError

from .polytopes import LatticePolytope


class PolytopeDocument(BaseModel):
    """Validated polytope file contents."""

    model_config = ConfigDict(extra="forbid")

    vertices: List[List[StrictInt]]

    @field_validator("vertices")
    @classmethod
    def _rectangular(cls, rows: List[List[int]]) -> List[List[int]]:
        if not rows:
            raise ValueError("vertex list is empty")
        if not rows[0]:
            raise ValueError("vertices must have at least one coordinate")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("all vertex rows must have equal length")
        return rows


def parse_polytope(text: str) -> LatticePolytope:
    """Parse polytope JSON text, raising InputError on any defect."""
    try:
        document = PolytopeDocument.model_validate_json(text)
    except ValidationError as e:
        raise InputError(f"invalid polytope JSON: {e.errors()[0]['msg']}") from e
    return LatticePolytope(tuple(tuple(v) for v in document.vertices))


def load_polytope(path: str | Path) -> LatticePolytope:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read polytope file {path}: {e.strerror}") from e
    return parse_polytope(text)


def dump_polytope(P: LatticePolytope) -> str:
    return json.dumps({"vertices": [list(v) for v in P.vertices]})
