"""
Output Rendering

JSON for machines (default), CSV and aligned text tables for humans. Tables
are built with pandas; nested fields are flattened with dotted names.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from utils.errors import InputError, OutputError

OUTPUT_FORMATS = ("json", "csv", "text")


def _frame(data: Dict[str, Any]) -> pd.DataFrame:
    """One row per validation result when present, otherwise one flattened row."""
    if "validation_results" in data:
        rows: List[Dict[str, Any]] = [
            {key: vr[key] for key in ("category", "check_name", "level", "message")}
            for vr in data["validation_results"]
        ]
        return pd.DataFrame(rows, columns=["category", "check_name", "level", "message"])
    flat = pd.json_normalize(data, sep=".")
    for column in flat.columns:
        flat[column] = flat[column].map(lambda v: json.dumps(v) if isinstance(v, (list, dict)) else v)
    return flat


def render(data: Dict[str, Any], output_format: str = "json") -> str:
    if output_format == "json":
        return json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"
    if output_format not in OUTPUT_FORMATS:
        raise InputError(f"unknown output format '{output_format}', expected one of {OUTPUT_FORMATS}")
    frame = _frame(data)
    if output_format == "csv":
        return frame.to_csv(index=False)
    if "validation_results" in data:
        return frame.to_string(index=False) + "\n"
    return frame.T.to_string(header=False) + "\n"


def write_output(text: str, out_path: Optional[Path], stream) -> None:
    """Write to out_path when given, otherwise to the stream."""
    if out_path is None:
        stream.write(text)
        return
    try:
        Path(out_path).write_text(text)
    except OSError as e:
        raise OutputError(f"cannot write {out_path}: {e.strerror}") from e
