"""
Test Suite for Logging and Tracing

Structured records are JSON with component and context; track_operation
logs start, completion and failure.
"""

import json
import logging
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from utils.errors import GuardExceededError
from utils.logging_config import LOGGER_NAME, log_file_path, resolve_level, setup_logging
from utils.observability import get_logger, get_tracer, track_operation


def records(caplog):
    return [json.loads(r.getMessage()) for r in caplog.records if r.name.startswith(LOGGER_NAME + ".")]


def test_structured_record(caplog):
    caplog.set_level(logging.INFO, logger=LOGGER_NAME)
    get_logger("geometry").info("Hull computed", vertices=6, dim=2)
    record = records(caplog)[-1]
    assert record["component"] == "geometry"
    assert record["message"] == "Hull computed"
    assert record["context"] == {"vertices": 6, "dim": 2}
    assert record["level"] == "INFO"


def test_logger_is_cached():
    assert get_logger("codes") is get_logger("codes")
    assert get_tracer() is get_tracer()


def test_track_operation_success(caplog):
    caplog.set_level(logging.INFO, logger=LOGGER_NAME)
    with track_operation("distance", "exact_min_distance", {"q": 5}):
        pass
    messages = [r["message"] for r in records(caplog)]
    assert messages[-2:] == ["Starting exact_min_distance", "Completed exact_min_distance"]
    assert records(caplog)[-1]["context"]["q"] == 5


def test_track_operation_failure(caplog):
    caplog.set_level(logging.INFO, logger=LOGGER_NAME)
    with pytest.raises(GuardExceededError):
        with track_operation("fields", "field_new"):
            raise GuardExceededError("max_field", 512, 256)
    failure = records(caplog)[-1]
    assert failure["message"] == "Failed field_new"
    assert failure["level"] == "ERROR"
    assert failure["context"]["error_type"] == "GuardExceededError"
    assert failure["context"]["exit_code"] == 3


def test_records_below_level_are_dropped(caplog):
    caplog.set_level(logging.WARNING, logger=LOGGER_NAME)
    get_logger("cli").info("not shown")
    assert not any(r["message"] == "not shown" for r in records(caplog))


def test_setup_logging_writes_to_stderr():
    logger = setup_logging("DEBUG")
    assert logger.level == logging.DEBUG
    assert logger.handlers[0].stream is sys.stderr
    setup_logging("WARNING")


def test_setup_logging_to_file(tmp_path):
    logger = setup_logging("INFO", log_to_file=True, log_dir=str(tmp_path / "logs"), command="verify-paper")
    logger.info("written")
    for handler in logger.handlers:
        handler.flush()
    files = list((tmp_path / "logs").glob("verify_paper_*.log"))
    assert len(files) == 1, f"Expected one log file, found {files}"
    assert "written" in files[0].read_text()
    setup_logging("WARNING")


def test_log_levels():
    assert resolve_level("debug") == logging.DEBUG
    assert log_file_path("logs", "distance").name.startswith("distance_")
    with pytest.raises(ValueError):
        resolve_level("verbose")
