"""Exact extremal numbers at small n and greedy lower-bound packings"""

from hyperconf.solver.exact import SolverResult, exact_f
from hyperconf.solver.greedy import GENERATOR, greedy_pack, verify_witness

__all__ = [
    "exact_f",
    "SolverResult",
    "greedy_pack",
    "verify_witness",
    "GENERATOR",
]
