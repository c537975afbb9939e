"""
Helper utilities for the hyperconf toolkit.

General-purpose functions shared by the command line and report writers.
"""

import uuid
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Union


def generate_run_id() -> str:
    """
    Generate a unique run ID for a batch of results.

    Returns:
        Unique run ID string

    Example:
        >>> run_id = generate_run_id()
        >>> print(run_id)
        'run_8f7e6d5c4b3a'
    """
    return f"run_{uuid.uuid4().hex[:12]}"


def format_timestamp(dt: Optional[datetime] = None) -> str:
    """UTC timestamp in ISO form, to the second (default: now)."""
    return (dt or datetime.now(timezone.utc)).astimezone(timezone.utc).isoformat(timespec="seconds")


def format_fraction(value: Fraction) -> str:
    """
    Render a reduced fraction as ``p/q`` (or ``p`` when the denominator is 1).

    Example:
        >>> format_fraction(Fraction(14, 72))
        '7/36'
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_int_list(value: str) -> List[int]:
    """
    Parse a comma-separated string of integers.

    Example:
        >>> parse_int_list("40, 6,12")
        [40, 6, 12]
    """
    if not value:
        return []
    return [int(item.strip()) for item in value.split(",") if item.strip()]


def ensure_parent(path: Union[str, Path]) -> Path:
    """Create the directory an output file will be written into; returns the file path."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    return file_path
