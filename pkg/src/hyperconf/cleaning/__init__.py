"""Cleaning of k-free hypergraphs with an auditable removal ledger"""

from hyperconf.cleaning.cleaner import (
    CleaningLedger,
    CleaningReport,
    CleaningStage,
    CleaningViolation,
    StagePlan,
    clean,
    cleaning_constant,
    divisor_sizes,
    stage_plan,
    verify_cleaned,
)

__all__ = [
    "clean",
    "verify_cleaned",
    "stage_plan",
    "cleaning_constant",
    "divisor_sizes",
    "StagePlan",
    "CleaningStage",
    "CleaningLedger",
    "CleaningViolation",
    "CleaningReport",
]
