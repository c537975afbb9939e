"""
Partition of a k-free hypergraph by t-tight component size (odd k).

Edges fall into F1, F2 and F3 by the size of their component (1, 2, at least
3). G1 and G2 are the t-shadows of F1 and F2; G3 holds the t-sets covered by
the 2-configuration spans of exactly one large component, outside G1 and G2.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from hyperconf.exceptions.errors import (
    BadArgs,
    ClaimViolation,
    ComponentTooLarge,
    NoTwoConfiguration,
    NotKFree,
)
from hyperconf.hypergraph.core import (
    Hypergraph,
    Params,
    TGraph,
    check_uniformity,
    t_shadow,
    t_subsets_of_mask,
    t_tight_components,
)
from hyperconf.search.engine import find_witness
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class OddPartition:
    hypergraph: Hypergraph
    params: Params
    components: Tuple[FrozenSet[int], ...]
    F1: FrozenSet[int]
    F2: FrozenSet[int]
    F3: FrozenSet[int]
    G1: TGraph
    G2: TGraph
    G3: TGraph
    alpha: Fraction
    pairs_tight: bool

    @property
    def large_components(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(c for c in self.components if len(c) >= 3)

    def to_record(self) -> Dict[str, Any]:
        return {
            "F1": len(self.F1),
            "F2": len(self.F2),
            "F3": len(self.F3),
            "G1": len(self.G1),
            "G2": len(self.G2),
            "G3": len(self.G3),
            "alpha": str(self.alpha),
            "pairs_tight": self.pairs_tight,
            "total_t_sets": comb(self.hypergraph.n, self.params.t),
        }


def _pair_spans(F: Hypergraph, component: FrozenSet[int], bound: int) -> List[int]:
    return [
        F.masks[i] | F.masks[j]
        for i, j in combinations(sorted(component), 2)
        if (F.masks[i] | F.masks[j]).bit_count() <= bound
    ]


def odd_partition(F: Hypergraph, params: Params) -> OddPartition:
    """
    Split F into F1/F2/F3 and build G1/G2/G3 for odd k.

    Asserts |G1| = C(r,t)|F1|, the disjointness of G1, G2 and G3, and
    |G1| + |G2| + |G3| <= C(n,t). The identity 2|G2| = (2C(r,t)-1)|F2| is
    asserted when every size-2 component meets in exactly t vertices and
    logged as a warning otherwise.

    Raises:
        BadArgs: k is even
        NotKFree: F contains a k-configuration
        ComponentTooLarge: A t-tight component has more than k-1 edges

    Example:
        >>> p = odd_partition(build(3, 7, [[0, 1, 2], [1, 2, 3], [4, 5, 6]]), Params(3, 2, 5))
        >>> len(p.G2), len(p.G1)
        (5, 3)
    """
    check_uniformity(F, params)
    r, t, k = params.r, params.t, params.k
    if k % 2 == 0:
        raise BadArgs(f"odd_partition needs odd k, got k={k}", details={"k": k})
    witness = find_witness(F, params, k)
    if witness is not None:
        raise NotKFree(
            f"Hypergraph contains a {k}-configuration",
            details={"witness": [list(e) for e in witness.edges_in(F)]},
        )

    components = t_tight_components(F, t)
    for c in components:
        if len(c) > k - 1:
            raise ComponentTooLarge(
                f"t-tight component with {len(c)} edges exceeds k-1={k - 1}",
                details={"size": len(c), "witness": [list(F.edges[i]) for i in sorted(c)]},
            )

    F1 = frozenset(i for c in components if len(c) == 1 for i in c)
    F2 = frozenset(i for c in components if len(c) == 2 for i in c)
    F3 = frozenset(i for c in components if len(c) >= 3 for i in c)
    G1 = t_shadow(F.subgraph(F1), t)
    G2 = t_shadow(F.subgraph(F2), t)

    hits: Counter = Counter()
    for c in components:
        if len(c) < 3:
            continue
        covered = {T for mask in _pair_spans(F, c, params.s(2)) for T in t_subsets_of_mask(mask, t)}
        hits.update(covered)
    lower = G1.members | G2.members
    G3 = TGraph(t, frozenset(T for T, count in hits.items() if count == 1 and T not in lower))

    pairs_tight = all(
        len(set(F.edges[a]) & set(F.edges[b])) == t
        for c in components
        if len(c) == 2
        for a, b in [sorted(c)]
    )
    alpha = Fraction(2 * params.binom_rt - 1, 2)
    p = OddPartition(F, params, components, F1, F2, F3, G1, G2, G3, alpha, pairs_tight)

    if len(G1) != params.binom_rt * len(F1):
        raise ClaimViolation("|G1| != C(r,t)|F1|", details=p.to_record())
    g2_target = (2 * params.binom_rt - 1) * len(F2)
    if pairs_tight:
        if 2 * len(G2) != g2_target:
            raise ClaimViolation("2|G2| != (2C(r,t)-1)|F2|", details=p.to_record())
    elif 2 * len(G2) != g2_target:
        logger.warning(
            f"Size-2 components overlap in more than t vertices: 2|G2|={2 * len(G2)}, "
            f"(2C(r,t)-1)|F2|={g2_target}"
        )
    if G1.members & G2.members or G3.members & lower:
        raise ClaimViolation("G1, G2 and G3 are not pairwise disjoint", details=p.to_record())
    if len(G1) + len(G2) + len(G3) > comb(F.n, t):
        raise ClaimViolation("|G1| + |G2| + |G3| exceeds C(n,t)", details=p.to_record())

    logger.debug(f"Odd partition at ({r},{t},{k}): {p.to_record()}")
    return p


@dataclass(frozen=True)
class ComponentReport:
    """Measured against analytic G3 counts for one component of size at least 3."""

    component: FrozenSet[int]
    pair: Tuple[int, int]
    third: Optional[int]
    span_size: int
    examined: int
    measured: int
    bound: int
    bound_asserted: bool
    alpha_target: Fraction
    k_target: int

    @property
    def alpha_holds(self) -> bool:
        return self.measured >= self.alpha_target

    @property
    def k_holds(self) -> bool:
        return self.measured >= self.k_target

    def to_record(self) -> Dict[str, Any]:
        return {
            "component": sorted(self.component),
            "pair": list(self.pair),
            "third": self.third,
            "span": self.span_size,
            "examined": self.examined,
            "measured": self.measured,
            "bound": self.bound,
            "bound_asserted": self.bound_asserted,
            "alpha_target": str(self.alpha_target),
            "alpha_holds": self.alpha_holds,
            "k_target": self.k_target,
            "k_holds": self.k_holds,
        }


def odd_g3_bound_report(p: OddPartition, params: Params) -> List[ComponentReport]:
    """
    Compare |G3 ∩ V(S_C)| with its analytic lower bound for each large component.

    S_C is the first pair of edges of C forming a 2-configuration and S_C' the
    first further edge of C extending it to a 3-configuration. The bound
    C(|V(S_C)|,t) - (k-3)C(2t-2,t) - (k-2)(k-5)C(4t-4,t) is asserted when
    S_C' exists and k >= 5. The comparisons with alpha|C| and k(2C(r,t)-1)
    are reported only.

    Raises:
        NoTwoConfiguration: A large component has no 2-configuration
        ClaimViolation: The measured count is below an asserted bound
    """
    F = p.hypergraph
    t, k = params.t, params.k
    reports: List[ComponentReport] = []
    for c in p.large_components:
        pair = next(
            (
                (i, j)
                for i, j in combinations(sorted(c), 2)
                if (F.masks[i] | F.masks[j]).bit_count() <= params.s(2)
            ),
            None,
        )
        if pair is None:
            raise NoTwoConfiguration(
                "Component of size at least 3 has no 2-configuration",
                details={"witness": [list(F.edges[i]) for i in sorted(c)]},
            )
        pair_mask = F.masks[pair[0]] | F.masks[pair[1]]
        third = next(
            (
                g
                for g in sorted(c - set(pair))
                if (pair_mask | F.masks[g]).bit_count() <= params.s(3)
            ),
            None,
        )
        size = pair_mask.bit_count()
        measured = sum(1 for T in t_subsets_of_mask(pair_mask, t) if T in p.G3)
        bound = (
            comb(size, t)
            - (k - 3) * comb(2 * t - 2, t)
            - (k - 2) * (k - 5) * comb(4 * t - 4, t)
        )
        report = ComponentReport(
            component=c,
            pair=pair,
            third=third,
            span_size=size,
            examined=comb(size, t),
            measured=measured,
            bound=bound,
            bound_asserted=third is not None and k >= 5,
            alpha_target=p.alpha * len(c),
            k_target=k * (2 * params.binom_rt - 1),
        )
        if report.bound_asserted and measured < bound:
            raise ClaimViolation(
                f"G3 count {measured} below the bound {bound}", details=report.to_record()
            )
        if third is None:
            logger.warning(f"No 3-configuration extends the pair {list(pair)} in its component")
        if not report.alpha_holds:
            logger.warning(
                f"Component {sorted(c)}: measured {measured} below alpha|C| = {report.alpha_target}"
            )
        reports.append(report)
    return reports
