"""
Closed-form limit values, thresholds and binomial inequality checks.

Everything here is exact: ``math.comb`` for binomials and ``Fraction`` for
densities. Decimal values appear only in exported tables, for display.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from hyperconf.exceptions.errors import BadArgs, ClaimViolation, HypothesisViolated
from hyperconf.models.certificate import Certificate
from hyperconf.utils.helpers import format_fraction
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


class Status(str, Enum):
    PROVEN_EXACT = "proven-exact"
    UPPER_BOUND = "upper-bound"
    CONJECTURED = "conjectured"


@dataclass(frozen=True)
class KnownValue:
    """A limit density value with its provenance."""

    r: int
    t: int
    k: int
    value: Fraction
    status: Status
    source: str

    def to_record(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "t": self.t,
            "k": self.k,
            "value": format_fraction(self.value),
            "decimal": float(self.value),
            "status": self.status.value,
            "source": self.source,
        }

    def to_text(self) -> str:
        return f"{self.r} {self.t} {self.k} {format_fraction(self.value)} {self.status.value} {self.source}"


# Exact values for r=3, t=2 that no family formula covers
_SPECIFIC: Dict[int, Tuple[Fraction, Status]] = {
    2: (Fraction(1, 6), Status.PROVEN_EXACT),
    3: (Fraction(1, 5), Status.PROVEN_EXACT),
    4: (Fraction(7, 36), Status.PROVEN_EXACT),
    5: (Fraction(1, 5), Status.CONJECTURED),
    7: (Fraction(1, 5), Status.CONJECTURED),
}


def binom(n: int, k: int) -> int:
    """
    Exact binomial coefficient C(n, k) for 0 <= k <= n.

    Example:
        >>> binom(26, 2)
        325
    """
    if not 0 <= k <= n:
        raise BadArgs(f"binom needs 0 <= k <= n, got n={n}, k={k}", details={"n": n, "k": k})
    return comb(n, k)


def _check_params(r: int, t: int, k: int) -> None:
    if not (r > t >= 1 and k >= 2):
        raise BadArgs(
            f"Need r > t >= 1 and k >= 2, got ({r}, {t}, {k})", details={"r": r, "t": t, "k": k}
        )


def _root_ceiling(value: int, t: int) -> int:
    """Smallest integer x >= 0 with x**t >= value."""
    lo, hi = 0, 1
    while hi**t < value:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**t >= value:
            hi = mid
        else:
            lo = mid + 1
    return lo


def r_threshold(k: int, t: int) -> int:
    """Smallest integer r with r >= t + (k^3 t!)^(1/t), for any k >= 2 and t >= 1."""
    return t + _root_ceiling(k**3 * factorial(t), t)


def r_threshold_even(k: int, t: int) -> int:
    """
    Smallest r with r >= t + (k^3 t!)^(1/t), using exact integer root tests.

    Example:
        >>> r_threshold_even(4, 2)
        14
    """
    if k < 2 or k % 2 or t < 2:
        raise BadArgs(f"Need even k >= 2 and t >= 2, got k={k}, t={t}", details={"k": k, "t": t})
    return r_threshold(k, t)


def corollary_lower_bound(r: int, t: int) -> Fraction:
    """The packing lower bound 1/(t! C(r,t)), valid for every k >= 2."""
    _check_params(r, t, 2)
    return Fraction(1, factorial(t) * comb(r, t))


def odd_upper_bound(r: int, t: int, k: int) -> Fraction:
    """
    Upper bound 2/(t! (2C(r,t)-1)) on the limit for odd k.

    Only established for r large with respect to k and t; tables tag it
    ``upper-bound`` accordingly.

    Example:
        >>> odd_upper_bound(4, 2, 5)
        Fraction(1, 11)
    """
    if k % 2 == 0 or t < 2 or r <= t or k < 3:
        raise BadArgs(
            f"odd_upper_bound needs odd k >= 3, t >= 2 and r > t, got ({r}, {t}, {k})",
            details={"r": r, "t": t, "k": k},
        )
    return Fraction(2, factorial(t) * (2 * comb(r, t) - 1))


def pi_formulas(r: int, t: int, k: int) -> List[Tuple[str, Fraction]]:
    """
    Every family formula applicable at (r, t, k), as (source, value) pairs.

    For t = 1 only the loose-tree formula applies; the other families are
    stated for 2 <= t <= r-1.

    Raises:
        ClaimViolation: Two applicable formulas disagree
    """
    _check_params(r, t, k)
    C = comb(r, t)
    out: List[Tuple[str, Fraction]] = []
    if t == 1:
        out.append(("t1-family", Fraction(k - 1, (k - 1) * (r - 1) + 1)))
        return out
    if k == 2:
        out.append(("k2-family", Fraction(1, factorial(t) * C)))
    if k == 3:
        out.append(("k3-family", Fraction(2, factorial(t) * (2 * C - 1))))
        if t == 2:
            out.append(("t2-k3-family", Fraction(1, r * r - r - 1)))
    if k == 4 and r >= 4:
        out.append(("k4-family", Fraction(1, factorial(t) * C)))
    if k % 2 == 0 and r >= r_threshold(k, t):
        out.append(("even-k-large-r", Fraction(1, factorial(t) * C)))

    values = {value for _, value in out}
    if len(values) > 1:
        raise ClaimViolation(
            f"Closed forms disagree at ({r}, {t}, {k})",
            details={"formulas": {name: str(value) for name, value in out}},
        )
    return out


def pi_known(r: int, t: int, k: int) -> Optional[KnownValue]:
    """
    The pinned limit value at (r, t, k), if any.

    Specific values for r=3, t=2 take precedence over the family formulas.

    Example:
        >>> pi_known(3, 2, 4).value
        Fraction(7, 36)
        >>> pi_known(5, 1, 3).value
        Fraction(2, 9)
    """
    _check_params(r, t, k)
    if (r, t) == (3, 2) and k in _SPECIFIC:
        value, status = _SPECIFIC[k]
        return KnownValue(r, t, k, value, status, "r3-t2-specific")
    formulas = pi_formulas(r, t, k)
    if not formulas:
        return None
    source, value = formulas[0]
    return KnownValue(r, t, k, value, Status.PROVEN_EXACT, source)


def check_claim_calc(r: int, t: int, k: int) -> Certificate:
    """
    Certificate for C(2r-t,t) - [2C(r,t)-1] - (k-3) >= (k-2)^3.

    Raises:
        HypothesisViolated: t < 2, k < 2 or r below t + (k^3 t!)^(1/t)
    """
    if t < 2 or k < 2:
        raise HypothesisViolated("t,k >= 2", details={"t": t, "k": k})
    threshold = r_threshold(k, t)
    if r < threshold:
        raise HypothesisViolated("r >= t + (k^3 t!)^(1/t)", details={"r": r, "threshold": threshold})
    lhs = comb(2 * r - t, t) - (2 * comb(r, t) - 1) - (k - 3)
    return Certificate("two-config-span", lhs=lhs, rhs=(k - 2) ** 3, details={"r": r, "t": t, "k": k})


def _require_large_pair(r: int, t: int) -> None:
    if not (3 <= t < r or (t == 2 and r >= 4)):
        raise HypothesisViolated("3 <= t < r or (t = 2 and r >= 4)", details={"r": r, "t": t})


def check_claim_calc2(r: int, t: int) -> Certificate:
    """
    Certificate for C(3r-2t,t) - 4 >= 3C(r,t).

    Example:
        >>> check_claim_calc2(4, 2).holds
        True
    """
    _require_large_pair(r, t)
    return Certificate(
        "three-config-span",
        lhs=comb(3 * r - 2 * t, t) - 4,
        rhs=3 * comb(r, t),
        details={"r": r, "t": t},
    )


def check_claim_calc3(r: int, t: int) -> Certificate:
    """Certificate for C(2r-t,t) >= 2C(r,t) + 2."""
    _require_large_pair(r, t)
    return Certificate(
        "two-config-surplus",
        lhs=comb(2 * r - t, t),
        rhs=2 * comb(r, t) + 2,
        details={"r": r, "t": t},
    )


def known_value_table(r_max: int = 6, k_max: int = 7, t_max: int = 3) -> List[KnownValue]:
    """
    Known values on the grid 2 <= r <= r_max, 1 <= t <= min(r-1, t_max), 2 <= k <= k_max.

    Where no value is pinned and k is odd with t >= 2, the odd-k upper bound
    is listed instead.
    """
    rows: List[KnownValue] = []
    for r in range(2, r_max + 1):
        for t in range(1, min(r - 1, t_max) + 1):
            for k in range(2, k_max + 1):
                known = pi_known(r, t, k)
                if known is not None:
                    rows.append(known)
                elif k % 2 and t >= 2:
                    rows.append(
                        KnownValue(r, t, k, odd_upper_bound(r, t, k), Status.UPPER_BOUND, "odd-k-large-r")
                    )
    logger.debug(f"Known-value table with {len(rows)} rows")
    return rows


def known_values_frame(r_max: int = 6, k_max: int = 7, t_max: int = 3) -> pd.DataFrame:
    """The known-value table as a DataFrame (one row per value)."""
    records = [row.to_record() for row in known_value_table(r_max, k_max, t_max)]
    return pd.DataFrame.from_records(
        records, columns=["r", "t", "k", "value", "decimal", "status", "source"]
    )
