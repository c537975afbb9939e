"""
Certificates for exact inequality checks.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Certificate:
    """
    Outcome of one exact inequality check ``lhs >= rhs``.

    Example:
        >>> Certificate("two-config-span", lhs=15, rhs=14).holds
        True
    """

    name: str
    lhs: Number
    rhs: Number
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def slack(self) -> Number:
        return self.lhs - self.rhs

    def to_record(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            **{k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.details.items()},
        }
