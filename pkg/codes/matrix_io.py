"""
Generator Matrix Files

Header line "q=<q> r=<r> n=<n> k=<k>", then k rows of n whitespace-separated
integers: field encodings ("int") or discrete logs ("log"). Entries are never
zero, so the log form is always defined.
"""

import re
from pathlib import Path
from typing import Dict, Tuple

import numpy as np

from utils.errors import InputError, OutputError

from .toric_code import ToricCode

MATRIX_FORMATS = ("int", "log")

_HEADER = re.compile(r"^q=(\d+) r=(\d+) n=(\d+) k=(\d+)$")


def format_generator(code: ToricCode, entry_format: str = "int") -> str:
    if entry_format not in MATRIX_FORMATS:
        raise InputError(f"unknown matrix format '{entry_format}', expected one of {MATRIX_FORMATS}")
    matrix = code.generator
    if entry_format == "log":
        matrix = code.field.log_table[matrix]
    lines = [f"q={code.field.q} r={code.r} n={code.n} k={code.k}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in matrix)
    return "\n".join(lines) + "\n"


def write_generator(code: ToricCode, path: str | Path, entry_format: str = "int") -> None:
    text = format_generator(code, entry_format)
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise OutputError(f"cannot write generator matrix to {path}: {e.strerror}") from e


def parse_generator(text: str) -> Tuple[Dict[str, int], np.ndarray]:
    """Header fields and the k x n entry matrix of a generator file."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("generator matrix file is empty")
    match = _HEADER.match(lines[0].strip())
    if not match:
        raise InputError(f"bad generator matrix header: {lines[0]!r}")
    header = dict(zip(("q", "r", "n", "k"), (int(g) for g in match.groups())))
    rows = [[int(x) for x in line.split()] for line in lines[1:]]
    if len(rows) != header["k"] or any(len(row) != header["n"] for row in rows):
        raise InputError("generator matrix body does not match its header")
    return header, np.array(rows, dtype=np.int64).reshape(header["k"], header["n"])
