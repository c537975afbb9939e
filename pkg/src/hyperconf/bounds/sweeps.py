"""
Grid sweeps over the binomial inequalities and the ratio step.

Grid cells are independent, so ``workers > 1`` spreads the t values of the
grid over a process pool. Ratio-step samples come from a seeded
``numpy.random.Generator(PCG64(seed))``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from hyperconf.bounds.calculator import (
    check_claim_calc,
    check_claim_calc2,
    check_claim_calc3,
    r_threshold,
)
from hyperconf.exceptions.errors import ClaimViolation, HypothesisViolated
from hyperconf.models.certificate import Certificate
from hyperconf.reduction.reducers import ratio_step_ok
from hyperconf.utils.config import get_config
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)

GENERATOR = "numpy.PCG64"


@dataclass
class SweepReport:
    """Checked-case counts and counterexamples, keyed by check name."""

    checked: Dict[str, int] = field(default_factory=dict)
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def add(self, cert: Certificate) -> None:
        self.checked[cert.name] = self.checked.get(cert.name, 0) + 1
        if not cert.holds:
            self.counterexamples.append(cert.to_record())

    def merge(self, other: "SweepReport") -> None:
        for name, count in other.checked.items():
            self.checked[name] = self.checked.get(name, 0) + count
        self.counterexamples.extend(other.counterexamples)

    def to_records(self) -> List[Dict[str, Any]]:
        rows: List[Dict[str, Any]] = [
            {"check": name, "checked": count, "counterexamples": sum(
                1 for c in self.counterexamples if c["check"] == name
            )}
            for name, count in sorted(self.checked.items())
        ]
        return rows + self.counterexamples


def _sweep_t(args: Tuple[int, int, int]) -> SweepReport:
    t, r_max, k_max = args
    report = SweepReport()
    for k in range(2, k_max + 1):
        for r in range(max(t + 1, r_threshold(k, t)), r_max + 1):
            report.add(check_claim_calc(r, t, k))
    for r in range(t + 1, r_max + 1):
        if t == 2 and r < 4:
            continue
        report.add(check_claim_calc2(r, t))
        report.add(check_claim_calc3(r, t))
    return report


def sweep_claims(
    r_max: Optional[int] = None,
    t_max: Optional[int] = None,
    k_max: Optional[int] = None,
    workers: int = 1,
) -> SweepReport:
    """
    Check the three binomial inequalities on every hypothesis-satisfying grid cell.

    Defaults come from settings (r <= 40, t <= 6, k <= 12).

    Example:
        >>> sweep_claims(r_max=10, t_max=3, k_max=4).ok
        True
    """
    settings = get_config()
    r_max = r_max or settings.grid_r_max
    t_max = t_max or settings.grid_t_max
    k_max = k_max or settings.grid_k_max
    jobs = [(t, r_max, k_max) for t in range(2, t_max + 1)]

    report = SweepReport()
    if workers > 1 and len(jobs) > 1:
        with Pool(processes=min(workers, len(jobs))) as pool:
            parts = pool.map(_sweep_t, jobs)
    else:
        parts = [_sweep_t(job) for job in jobs]
    for part in parts:
        report.merge(part)

    logger.info(
        f"Claim sweep r<={r_max}, t<={t_max}, k<={k_max}: "
        f"{sum(report.checked.values())} cases, {len(report.counterexamples)} counterexamples"
    )
    return report


def ratio_step_samples(samples: int, seed: int) -> np.ndarray:
    """
    Hypothesis-satisfying ratio-step samples as rows (x1, y1, x2, y2, a_num, a_den).

    alpha = a_num / a_den is an integer or half-integer in (0, 20].
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    a_den = rng.integers(1, 3, size=samples)
    a_num = rng.integers(1, 21, size=samples)
    y1 = rng.integers(0, 1001, size=samples)
    x1 = rng.integers(0, a_num * y1 // a_den + 1)
    y2 = rng.integers(np.maximum(0, y1 - (x1 * a_den) // a_num), y1 + 1)
    x2 = rng.integers(0, (x1 * a_den - a_num * (y1 - y2)) // a_den + 1)
    return np.stack([x1, y1, x2, y2, a_num, a_den], axis=1)


def sweep_ratio_steps(samples: Optional[int] = None, seed: int = 0) -> SweepReport:
    """
    Check the ratio step on random hypothesis-satisfying quadruples.

    A sample whose hypotheses fail is a generator defect and is reported as a
    counterexample as well.
    """
    samples = samples or get_config().ratio_samples
    report = SweepReport()
    name = "ratio-step"
    for x1, y1, x2, y2, a_num, a_den in ratio_step_samples(samples, seed).tolist():
        alpha = Fraction(a_num, a_den)
        record = {"check": name, "x1": x1, "y1": y1, "x2": x2, "y2": y2, "alpha": str(alpha)}
        try:
            ratio_step_ok(x1, y1, x2, y2, alpha)
        except (HypothesisViolated, ClaimViolation) as e:
            record["error"] = e.message
            report.counterexamples.append(record)
        report.checked[name] = report.checked.get(name, 0) + 1

    logger.info(
        f"Ratio step sweep ({GENERATOR}, seed={seed}): {samples} samples, "
        f"{len(report.counterexamples)} counterexamples"
    )
    return report
