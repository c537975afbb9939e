"""
Density reductions for k = 5 and k = 7.

Each reduction repeatedly removes a configuration from the current
hypergraph G and recomputes |J(G)| from scratch. Every step must satisfy
``|J(G)| - |J(G')| >= C(r, t) * (|G| - |G'|)``, and each step kind asserts a
stronger constant. A failed inequality on an input meeting the stated
preconditions raises :class:`ClaimViolation`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from hyperconf.exceptions.errors import (
    BadArgs,
    CaseAnalysisExhausted,
    ClaimViolation,
    HypothesisViolated,
    PreconditionViolated,
)
from hyperconf.hypergraph.core import Configuration, Edge, Hypergraph, Params, check_uniformity
from hyperconf.models.certificate import Certificate
from hyperconf.models.search import ConfigQuery
from hyperconf.reduction.supporting import supporting_J
from hyperconf.search.cancellation import create_search_token
from hyperconf.search.configurations import find_overlapping_pair, sub_configurations
from hyperconf.search.engine import find_witness, iter_configurations
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)

Rational = Union[int, Fraction]


def ratio_step_ok(x1: int, y1: int, x2: int, y2: int, alpha: Rational) -> bool:
    """
    Check the ratio step ``x1 * y2 >= x2 * y1`` from its hypotheses.

    Hypotheses, checked in order: x1 <= alpha*y1, x2 <= x1, y2 <= y1 and
    x1 - x2 >= alpha*(y1 - y2). When they hold the conclusion is asserted.

    Raises:
        HypothesisViolated: A hypothesis fails; ``which`` names it
        ClaimViolation: The conclusion fails although the hypotheses hold

    Example:
        >>> ratio_step_ok(9, 3, 6, 2, 3)
        True
    """
    if min(x1, y1, x2, y2) < 0:
        raise BadArgs("Ratio step values must be nonnegative", details={"values": [x1, y1, x2, y2]})
    a = Fraction(alpha)
    checks = (
        ("x1 <= alpha*y1", x1 <= a * y1),
        ("x2 <= x1", x2 <= x1),
        ("y2 <= y1", y2 <= y1),
        ("x1 - x2 >= alpha*(y1 - y2)", x1 - x2 >= a * (y1 - y2)),
    )
    for which, ok in checks:
        if not ok:
            raise HypothesisViolated(
                which, details={"x1": x1, "y1": y1, "x2": x2, "y2": y2, "alpha": str(a)}
            )
    if x1 * y2 < x2 * y1:
        raise ClaimViolation(
            "Ratio step conclusion x1*y2 >= x2*y1 failed",
            details={"x1": x1, "y1": y1, "x2": x2, "y2": y2, "alpha": str(a)},
        )
    return True


def density_condition(F1: Hypergraph, F2: Hypergraph, params: Params) -> Certificate:
    """
    Certificate for ``|F2| * |J(F1)| >= |F1| * |J(F2)|``.

    When the ratio-step hypotheses hold for x = |J|, y = |F| and alpha =
    C(r, t), the conclusion is also routed through :func:`ratio_step_ok`.
    """
    if not F2.is_subgraph_of(F1):
        raise BadArgs("F2 must be a sub-hypergraph of F1")
    x1, y1 = len(supporting_J(F1, params)), F1.m
    x2, y2 = len(supporting_J(F2, params)), F2.m
    alpha = params.binom_rt
    via_step = False
    try:
        via_step = ratio_step_ok(x1, y1, x2, y2, alpha)
    except HypothesisViolated as e:
        logger.debug(f"Ratio step not applicable: {e.which}")
    return Certificate(
        "density-condition",
        lhs=y2 * x1,
        rhs=y1 * x2,
        details={"J1": x1, "F1": y1, "J2": x2, "F2": y2, "via_ratio_step": via_step},
    )


@dataclass(frozen=True)
class ReductionStep:
    """One removal: which rule fired, what went, and the J/F counts around it."""

    rule: str
    removed: Tuple[Edge, ...]
    j_before: int
    j_after: int
    f_before: int
    f_after: int
    multiplier: int
    binom_rt: int

    @property
    def delta_j(self) -> int:
        return self.j_before - self.j_after

    @property
    def delta_f(self) -> int:
        return self.f_before - self.f_after

    @property
    def required(self) -> int:
        return self.multiplier * self.binom_rt

    def to_record(self) -> Dict[str, Any]:
        return {
            "rule": self.rule,
            "removed": [list(e) for e in self.removed],
            "delta_j": self.delta_j,
            "delta_f": self.delta_f,
            "inequality": f"{self.delta_j} >= {self.required}",
            "holds": self.delta_j >= self.required and self.delta_j >= self.binom_rt * self.delta_f,
        }


@dataclass
class ReductionTrace:
    params: Params
    initial: Hypergraph
    j_initial: int
    steps: List[ReductionStep] = field(default_factory=list)
    final: Optional[Hypergraph] = None
    j_final: Optional[int] = None

    def summary(self) -> Certificate:
        """The telescoped inequality |J(F1)| - |J(Fend)| >= C(r,t) (|F1| - |Fend|)."""
        final = self.final if self.final is not None else self.initial
        j_final = self.j_final if self.j_final is not None else self.j_initial
        return Certificate(
            "telescoped-reduction",
            lhs=self.j_initial - j_final,
            rhs=self.params.binom_rt * (self.initial.m - final.m),
            details={"steps": len(self.steps)},
        )

    def to_records(self) -> List[Dict[str, Any]]:
        return [step.to_record() for step in self.steps]


class _Reducer:
    """Shared state of one reduction run."""

    def __init__(self, F: Hypergraph, params: Params):
        self.params = params
        self.G = F
        self.j = len(supporting_J(F, params))
        self.trace = ReductionTrace(params=params, initial=F, j_initial=self.j)

    def remove(self, idxs: FrozenSet[int], rule: str, multiplier: int) -> None:
        G_next = self.G.without(idxs)
        j_next = len(supporting_J(G_next, self.params))
        step = ReductionStep(
            rule=rule,
            removed=tuple(self.G.edges[i] for i in sorted(idxs)),
            j_before=self.j,
            j_after=j_next,
            f_before=self.G.m,
            f_after=G_next.m,
            multiplier=multiplier,
            binom_rt=self.params.binom_rt,
        )
        if step.delta_j < step.required or step.delta_j < step.binom_rt * step.delta_f:
            raise ClaimViolation(
                f"Step {rule} lowered |J| by {step.delta_j}, needed {step.required}",
                details=step.to_record(),
            )
        logger.debug(f"Reduction step {rule}: dJ={step.delta_j}, dF={step.delta_f}")
        self.trace.steps.append(step)
        self.G, self.j = G_next, j_next

    def finish(self, free_minus: Sequence[int]) -> Tuple[Hypergraph, ReductionTrace]:
        for ell in free_minus:
            hit = find_witness(self.G, self.params, ell, minus=True)
            if hit is not None:
                raise ClaimViolation(
                    f"Reduced hypergraph still has a {ell}-minus configuration",
                    details={"witness": [list(e) for e in hit.edges_in(self.G)]},
                )
        self.trace.final, self.trace.j_final = self.G, self.j
        summary = self.trace.summary()
        if not summary.holds:
            raise ClaimViolation("Telescoped reduction inequality failed", details=summary.to_record())
        logger.info(
            f"Reduction finished: {self.trace.initial.m} -> {self.G.m} edges, "
            f"|J| {self.trace.j_initial} -> {self.j} in {len(self.trace.steps)} steps"
        )
        return self.G, self.trace


def _violated(which: str, F: Hypergraph, configs: Sequence[Configuration]) -> PreconditionViolated:
    return PreconditionViolated(
        f"Precondition failed: {which}",
        details={"which": which, "witness": [[list(e) for e in c.edges_in(F)] for c in configs]},
    )


def _require_free(F: Hypergraph, params: Params, ell: int, minus: bool) -> None:
    hit = find_witness(F, params, ell, minus)
    if hit is not None:
        raise _violated(f"{ell}{'-minus' if minus else ''}-free", F, [hit])


def _require_disjoint(
    F: Hypergraph, params: Params, first: Tuple[int, bool], second: Tuple[int, bool]
) -> None:
    pair = find_overlapping_pair(F, params, first, second)
    if pair is not None:
        label = lambda kind: f"{kind[0]}{'-minus' if kind[1] else ''}"  # noqa: E731
        raise _violated(f"{label(first)} and {label(second)} configurations edge-disjoint", F, pair)


def reduce_k5(F1: Hypergraph, params: Params) -> Tuple[Hypergraph, ReductionTrace]:
    """
    Remove 3-minus configurations one at a time until none is left (k = 5).

    Preconditions (verified): F1 is 2-minus-free, 4-minus-free and 5-free, and
    every 2-configuration is edge-disjoint from every 3-minus configuration.
    Each step must lower |J| by at least 3*C(r, t).

    Raises:
        PreconditionViolated: A precondition fails (witness in details)
        ClaimViolation: A step inequality fails
    """
    check_uniformity(F1, params)
    if params.k != 5:
        raise BadArgs(f"reduce_k5 needs k=5, got k={params.k}", details={"k": params.k})
    _require_free(F1, params, 2, minus=True)
    _require_free(F1, params, 4, minus=True)
    _require_free(F1, params, 5, minus=False)
    _require_disjoint(F1, params, (2, False), (3, True))

    reducer = _Reducer(F1, params)
    while True:
        S = find_witness(reducer.G, params, 3, minus=True)
        if S is None:
            break
        reducer.remove(S.edge_indices, "remove-3-minus", 3)
    return reducer.finish([3])


@dataclass(frozen=True)
class FourMinusCase:
    """Case of a 4-minus configuration S and the edges to remove for it."""

    case: int
    removal: FrozenSet[int]
    pairs: Tuple[Configuration, ...]

    @property
    def multiplier(self) -> int:
        return {1: 1, 2: 2, 3: 4}[self.case]


def classify_four_minus(G: Hypergraph, S: Configuration, params: Params) -> FourMinusCase:
    """
    Dispatch a 4-minus configuration to its removal case.

    Case 1: S contains no 2-configuration; remove its first edge.
    Case 2: S contains exactly one 2-configuration; remove that pair.
    Case 3: S splits into two disjoint 2-configurations; remove all of S.

    Raises:
        CaseAnalysisExhausted: S contains a 3-configuration or fits no case
    """
    triples = sub_configurations(S, G, params, 3)
    if triples:
        raise CaseAnalysisExhausted(
            "4-minus configuration contains a 3-configuration",
            details={"witness": [list(e) for e in triples[0].edges_in(G)]},
        )
    pairs = tuple(sub_configurations(S, G, params, 2))
    if not pairs:
        return FourMinusCase(1, frozenset({min(S.edge_indices)}), pairs)
    if len(pairs) == 1:
        return FourMinusCase(2, pairs[0].edge_indices, pairs)
    if (
        len(pairs) == 2
        and not pairs[0].edge_indices & pairs[1].edge_indices
        and pairs[0].edge_indices | pairs[1].edge_indices == S.edge_indices
    ):
        return FourMinusCase(3, S.edge_indices, pairs)
    raise CaseAnalysisExhausted(
        "4-minus configuration fits none of the removal cases",
        details={
            "configuration": [list(e) for e in S.edges_in(G)],
            "pairs": [sorted(p.edge_indices) for p in pairs],
        },
    )


def _three_inside_four(G: Hypergraph, params: Params) -> Optional[Configuration]:
    if G.m < 4:
        return None
    q3 = ConfigQuery.for_params(params, 3)
    for S in iter_configurations(G, q3, token=create_search_token()):
        q4 = ConfigQuery.for_params(params, 4, must_contain=S.edge_indices)
        if next(iter_configurations(G, q4, token=create_search_token()), None) is not None:
            return S
    return None


def reduce_k7(F1: Hypergraph, params: Params) -> Tuple[Hypergraph, ReductionTrace]:
    """
    Three-phase reduction for k = 7.

    Phase 1 removes 3-configurations contained in 4-configurations (each step
    lowers |J| by at least 3*C(r, t)). Phase 2 removes 4-minus configurations
    through :func:`classify_four_minus` (at least 1, 2 or 4 times C(r, t)).
    Phase 3 removes 5-minus configurations (at least 5*C(r, t)). Each phase
    runs to exhaustion before the next starts.

    Preconditions (verified): t >= 2 and (r, t) != (3, 2); F1 is 2-minus,
    3-minus and 6-minus free and 7-free; 2-configurations are edge-disjoint
    from 5-minus configurations; 3-configurations are edge-disjoint from
    4-minus configurations.

    Raises:
        PreconditionViolated: A precondition fails (witness in details)
        CaseAnalysisExhausted: A 4-minus configuration fits no removal case
        ClaimViolation: A step inequality fails
    """
    check_uniformity(F1, params)
    if params.k != 7:
        raise BadArgs(f"reduce_k7 needs k=7, got k={params.k}", details={"k": params.k})
    if params.t < 2 or (params.r, params.t) == (3, 2):
        raise PreconditionViolated(
            f"reduce_k7 needs t >= 2 and (r, t) != (3, 2), got ({params.r}, {params.t})",
            details={"which": "parameters", "r": params.r, "t": params.t, "witness": []},
        )
    for ell in (2, 3, 6):
        _require_free(F1, params, ell, minus=True)
    _require_free(F1, params, 7, minus=False)
    _require_disjoint(F1, params, (2, False), (5, True))
    _require_disjoint(F1, params, (3, False), (4, True))

    reducer = _Reducer(F1, params)

    while (S := _three_inside_four(reducer.G, params)) is not None:
        reducer.remove(S.edge_indices, "remove-3-in-4", 3)
    logger.debug(f"Phase 1 done with {reducer.G.m} edges")

    while (S := find_witness(reducer.G, params, 4, minus=True)) is not None:
        case = classify_four_minus(reducer.G, S, params)
        reducer.remove(case.removal, f"four-minus-case-{case.case}", case.multiplier)
    logger.debug(f"Phase 2 done with {reducer.G.m} edges")

    while (S := find_witness(reducer.G, params, 5, minus=True)) is not None:
        reducer.remove(S.edge_indices, "remove-5-minus", 5)
    logger.debug(f"Phase 3 done with {reducer.G.m} edges")

    return reducer.finish([2, 3, 4, 5, 6])
