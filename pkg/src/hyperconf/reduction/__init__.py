"""Supporting graphs, density reductions and the odd-k partition"""

from hyperconf.reduction.odd import ComponentReport, OddPartition, odd_g3_bound_report, odd_partition
from hyperconf.reduction.reducers import (
    FourMinusCase,
    ReductionStep,
    ReductionTrace,
    classify_four_minus,
    density_condition,
    ratio_step_ok,
    reduce_k5,
    reduce_k7,
)
from hyperconf.reduction.supporting import (
    Girth,
    check_supporting,
    non_edge_girth,
    packing_lower_bound,
    supporting_J,
)

__all__ = [
    # Supporting graphs
    "supporting_J",
    "check_supporting",
    "non_edge_girth",
    "Girth",
    "packing_lower_bound",
    # Reductions
    "ratio_step_ok",
    "density_condition",
    "ReductionStep",
    "ReductionTrace",
    "FourMinusCase",
    "classify_four_minus",
    "reduce_k5",
    "reduce_k7",
    # Odd k
    "OddPartition",
    "ComponentReport",
    "odd_partition",
    "odd_g3_bound_report",
]
