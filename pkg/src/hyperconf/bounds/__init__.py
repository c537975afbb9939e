"""Exact closed-form values, counting inequalities and grid sweeps"""

from hyperconf.bounds.calculator import (
    KnownValue,
    Status,
    binom,
    check_claim_calc,
    check_claim_calc2,
    check_claim_calc3,
    corollary_lower_bound,
    known_value_table,
    known_values_frame,
    odd_upper_bound,
    pi_formulas,
    pi_known,
    r_threshold,
    r_threshold_even,
)
from hyperconf.bounds.counting import edge_upper_bound, even_counting_chain, j0_j2_inequality
from hyperconf.bounds.sweeps import GENERATOR, SweepReport, ratio_step_samples, sweep_claims, sweep_ratio_steps

__all__ = [
    # Closed forms
    "binom",
    "pi_known",
    "pi_formulas",
    "KnownValue",
    "Status",
    "r_threshold",
    "r_threshold_even",
    "odd_upper_bound",
    "corollary_lower_bound",
    "known_value_table",
    "known_values_frame",
    # Inequalities
    "check_claim_calc",
    "check_claim_calc2",
    "check_claim_calc3",
    "j0_j2_inequality",
    "even_counting_chain",
    "edge_upper_bound",
    # Sweeps
    "sweep_claims",
    "sweep_ratio_steps",
    "ratio_step_samples",
    "SweepReport",
    "GENERATOR",
]
