"""
Services Package

Replication suite that checks the library against published results.
"""

from .paper_verification import (
    CASES,
    PaperVerificationService,
    ValidationLevel,
    ValidationResult,
    VerificationReport,
    verify_paper,
)

__all__ = [
    "CASES",
    "PaperVerificationService",
    "ValidationLevel",
    "ValidationResult",
    "VerificationReport",
    "verify_paper",
]
