"""
Test Suite for the Verification Service

Runs each replication case and checks that every result passes and that the
report serializes.
"""

import json
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from services.paper_verification import (
    CASES,
    PaperVerificationService,
    ValidationLevel,
    hexagon,
    verify_paper,
)
from utils.errors import InputError


def get_small_service():
    """Suite restricted to cheap hypercube codes"""
    service = PaperVerificationService(jobs=1)
    service.thresholds["hypercube_fields"] = (3, 4)
    service.thresholds["hypercube_max_messages"] = 10**4
    return service


def assert_all_pass(report):
    failed = [f"{vr.category}: {vr.check_name} ({vr.message})" for vr in report.validation_results if vr.level == ValidationLevel.FAIL]
    assert not failed, f"Failed checks: {failed}"
    assert report.passed
    assert report.summary["failed"] == 0


def test_hexagon_case():
    report = verify_paper("hexagon", jobs=1)
    assert_all_pass(report)
    names = [vr.check_name for vr in report.validation_results]
    assert "exact distance" in names and "bound chain" in names
    assert "b=3 a=3 shifted polygon" in names


def test_hypercube_case():
    report = get_small_service().run("hypercube")
    assert_all_pass(report)
    assert report.summary["total_checks"] > 10


def test_conjecture_cases():
    assert_all_pass(verify_paper("joyner42", jobs=1))
    report = verify_paper("joyner43", jobs=1)
    assert_all_pass(report)
    assert [vr.check_name for vr in report.validation_results] == ["q=8", "q=9", "q=5"]


def test_pick_case():
    report = verify_paper("pick")
    assert_all_pass(report)
    assert report.validation_results[0].check_name == "200 random polygons"


def test_report_serializes():
    report = verify_paper("pick")
    data = json.loads(json.dumps(report.to_dict()))
    assert data["passed"] is True
    assert data["validation_results"][0]["level"] == "PASS"


def test_unknown_case():
    with pytest.raises(InputError):
        verify_paper("octagon")


def test_case_list():
    assert CASES == ("hypercube", "hexagon", "joyner42", "joyner43", "pick")
    assert hexagon(2).vertices == ((0, 0), (0, 2), (2, 0), (2, 4), (4, 2), (4, 4))
