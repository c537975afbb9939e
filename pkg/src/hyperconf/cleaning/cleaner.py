"""
Cleaning of k-free hypergraphs.

:func:`clean` removes the edges of greedy maximal collections of pairwise
edge-disjoint configurations, stage by stage, until the result is
l-minus-free for every l in [2, k] dividing k-1 or k, has no 3-minus
configuration containing a 2-configuration, and keeps every a-minus
configuration edge-disjoint from every b-configuration when a + b = k.
Each stage records the configurations it removed and the explicit
``multiplier * C(n, t-1)`` ceiling its edge count must respect.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from hyperconf.exceptions.errors import LedgerBoundViolated, NotKFree
from hyperconf.hypergraph.core import Configuration, Edge, Hypergraph, Params, check_uniformity
from hyperconf.models.search import ConfigQuery, SearchBudget
from hyperconf.search.cancellation import create_search_token
from hyperconf.search.configurations import (
    contains_two_configuration_filter,
    disjointness_splits,
    edges_in_configurations,
    find_overlapping_pair,
    maximal_disjoint_collection,
)
from hyperconf.search.engine import find_witness, iter_configurations
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class StagePlan:
    """One cleaning stage: which configurations it collects and its ceiling multiplier."""

    name: str
    ell: int
    minus: bool
    multiplier: int
    with_two: bool = False
    split_a: Optional[int] = None


@dataclass
class CleaningStage:
    name: str
    bound: int
    removed: List[Tuple[Edge, ...]] = field(default_factory=list)
    edges_removed: int = 0

    def to_record(self) -> Dict[str, Any]:
        return {
            "stage": self.name,
            "bound": self.bound,
            "count": self.edges_removed,
            "witnesses": [[list(e) for e in config] for config in self.removed],
        }


@dataclass
class CleaningLedger:
    """Removal ledger of one :func:`clean` run."""

    params: Params
    n: int
    stages: List[CleaningStage] = field(default_factory=list)

    @property
    def total_removed(self) -> int:
        return sum(stage.edges_removed for stage in self.stages)

    @property
    def bound_total(self) -> int:
        return cleaning_constant(self.params) * comb(self.n, self.params.t - 1)

    def is_zero(self) -> bool:
        return self.total_removed == 0

    def to_records(self) -> List[Dict[str, Any]]:
        return [stage.to_record() for stage in self.stages]


def stage_plan(params: Params) -> List[StagePlan]:
    """
    The cleaning stages for ``params``, in execution order.

    Example:
        >>> [s.name for s in stage_plan(Params(3, 2, 5))]
        ['4-minus', '2-minus', '3-minus-with-2', 'pair:1,4', 'pair:2,3', 'pair:3,2', 'pair:4,1']
    """
    k = params.k
    plan: List[StagePlan] = []
    if k - 1 >= 2:
        plan.append(StagePlan(f"{k - 1}-minus", k - 1, True, k - 1))
    for ell in range(2, k - 1):
        if (k - 1) % ell == 0:
            j = (k - 1) // ell
        elif k % ell == 0:
            j = k // ell
        else:
            continue
        plan.append(StagePlan(f"{ell}-minus", ell, True, ell * (j - 1)))
    if k % 3 == 2:
        plan.append(StagePlan("3-minus-with-2", 3, True, 3 * ((k - 2) // 3), with_two=True))
    for a in range(1, k):
        b = k - a
        plan.append(StagePlan(f"pair:{a},{b}", b, False, b * a, split_a=a))
    return plan


def cleaning_constant(params: Params) -> int:
    """Sum of all stage multipliers: the cleaning removes at most this times C(n, t-1) edges."""
    return sum(stage.multiplier for stage in stage_plan(params))


def _minus_exists(params: Params, ell: int) -> bool:
    # an ell-minus configuration needs span s(ell)-1 >= r, i.e. ell >= 2
    return params.s(ell) - 1 >= params.r


def _collect(
    G: Hypergraph, params: Params, plan: StagePlan, budget: Optional[SearchBudget]
) -> List[Configuration]:
    if G.m < plan.ell:
        return []
    q = ConfigQuery.for_params(params, plan.ell, plan.minus)
    if plan.split_a is not None:
        a = plan.split_a
        if not _minus_exists(params, a) or G.m < a:
            return []
        h_a = edges_in_configurations(G, a, params.s(a) - 1, budget)
        if not h_a:
            return []
        return maximal_disjoint_collection(
            G, q, lambda config, _: bool(config.edge_indices & h_a), budget
        )
    if plan.with_two:
        return maximal_disjoint_collection(G, q, contains_two_configuration_filter(params), budget)
    return maximal_disjoint_collection(G, q, None, budget)


def clean(
    F: Hypergraph, params: Params, budget: Optional[SearchBudget] = None
) -> Tuple[Hypergraph, CleaningLedger]:
    """
    Clean a k-free hypergraph.

    Args:
        F: k-free hypergraph
        params: (r, t, k) with r equal to F's uniformity
        budget: Node limit per search

    Returns:
        Tuple of (cleaned sub-hypergraph, ledger)

    Raises:
        NotKFree: F contains a k-configuration
        LedgerBoundViolated: A stage removed more edges than its ceiling
    """
    check_uniformity(F, params)
    witness = find_witness(F, params, params.k)
    if witness is not None:
        raise NotKFree(
            f"Input contains a {params.k}-configuration",
            details={"witness": [list(e) for e in witness.edges_in(F)]},
        )

    base = comb(F.n, params.t - 1)
    ledger = CleaningLedger(params=params, n=F.n)
    G = F
    for plan in stage_plan(params):
        collection = _collect(G, params, plan, budget)
        stage = CleaningStage(name=plan.name, bound=plan.multiplier * base)
        removed: set = set()
        for config in collection:
            stage.removed.append(tuple(config.edges_in(G)))
            removed |= config.edge_indices
        stage.edges_removed = len(removed)
        ledger.stages.append(stage)

        if stage.edges_removed > stage.bound:
            raise LedgerBoundViolated(
                f"Stage {plan.name} removed {stage.edges_removed} edges, ceiling {stage.bound}",
                details=stage.to_record(),
            )
        if removed:
            G = G.without(removed)
        logger.debug(f"Cleaning stage {plan.name}: removed {stage.edges_removed} (ceiling {stage.bound})")

    if ledger.total_removed > ledger.bound_total:
        raise LedgerBoundViolated(
            f"Cleaning removed {ledger.total_removed} edges, ceiling {ledger.bound_total}",
            details={"total": ledger.total_removed, "bound": ledger.bound_total},
        )
    logger.info(
        f"Cleaning finished: {F.m} -> {G.m} edges over {len(ledger.stages)} stages "
        f"(ceiling {ledger.bound_total})"
    )
    return G, ledger


@dataclass(frozen=True)
class CleaningViolation:
    """One failed cleaning property with the configurations that witness it."""

    prop: str
    detail: str
    witness: Tuple[Tuple[Edge, ...], ...]

    def to_record(self) -> Dict[str, Any]:
        return {
            "property": self.prop,
            "detail": self.detail,
            "witness": [[list(e) for e in config] for config in self.witness],
        }


@dataclass
class CleaningReport:
    violations: List[CleaningViolation] = field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def to_records(self) -> List[Dict[str, Any]]:
        return [v.to_record() for v in self.violations]


def divisor_sizes(params: Params) -> List[int]:
    """Sizes l in [2, k] with l | k-1 or l | k."""
    k = params.k
    return [ell for ell in range(2, k + 1) if (k - 1) % ell == 0 or k % ell == 0]


def verify_cleaned(F: Hypergraph, params: Params, workers: int = 1) -> CleaningReport:
    """
    Re-check the cleaning properties exhaustively.

    ``workers`` fans the minus-freeness searches out over a process pool.

    Violations are returned as data with one witness per failed instance:
    ``P1`` per size l, ``P2`` for a 3-minus configuration containing a
    2-configuration, ``P3`` per split (a, b) with the offending pair.
    """
    check_uniformity(F, params)
    report = CleaningReport()

    for ell in divisor_sizes(params):
        hit = find_witness(F, params, ell, minus=True, workers=workers)
        if hit is not None:
            report.violations.append(
                CleaningViolation("P1", f"{ell}-minus configuration", (tuple(hit.edges_in(F)),))
            )

    if F.m >= 3:
        q = ConfigQuery.for_params(params, 3, minus=True)
        with_two = contains_two_configuration_filter(params)
        for config in iter_configurations(F, q, token=create_search_token()):
            if with_two(config, F):
                report.violations.append(
                    CleaningViolation(
                        "P2", "3-minus configuration containing a 2-configuration",
                        (tuple(config.edges_in(F)),),
                    )
                )
                break

    for a, b in disjointness_splits(params):
        pair = find_overlapping_pair(F, params, (a, True), (b, False))
        if pair is not None:
            minus_config, config = pair
            report.violations.append(
                CleaningViolation(
                    "P3", f"{a}-minus and {b}-configuration share an edge",
                    (tuple(minus_config.edges_in(F)), tuple(config.edges_in(F))),
                )
            )

    if report.violations:
        logger.warning(f"Cleaning check found {len(report.violations)} violations")
    return report

