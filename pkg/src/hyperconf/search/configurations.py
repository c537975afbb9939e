"""
Derived configuration queries.

2-configurations through an edge or around a t-set, greedy maximal
collections of pairwise edge-disjoint configurations, and the sets of edges
lying in some configuration.
"""

from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from hyperconf.exceptions.errors import BadArgs, NotKFree
from hyperconf.hypergraph.core import Configuration, Hypergraph, Params
from hyperconf.models.search import ConfigQuery, SearchBudget
from hyperconf.search.cancellation import SearchToken, create_search_token
from hyperconf.search.engine import ConfigFilter, find_witness, iter_configurations
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


def _unbounded_list(F: Hypergraph, q: ConfigQuery) -> List[Configuration]:
    return list(iter_configurations(F, q, token=create_search_token()))


def two_configs_through_edge(
    F: Hypergraph, params: Params, e: int, verify: bool = False
) -> List[Configuration]:
    """
    All 2-configurations containing edge ``e``.

    In a k-free hypergraph there are at most k-2 of them.

    Args:
        F: Hypergraph
        params: (r, t, k)
        e: Edge index
        verify: Check that F is k-free first

    Raises:
        NotKFree: ``verify`` is set and F has a k-configuration
    """
    F.check_indices([e])
    if verify:
        witness = find_witness(F, params, params.k)
        if witness is not None:
            raise NotKFree(
                f"Hypergraph contains a {params.k}-configuration",
                details={"witness": witness.edges_in(F)},
            )
    if F.m < 2:
        return []
    return _unbounded_list(F, ConfigQuery.for_params(params, 2, must_contain=frozenset({e})))


def two_configs_through_tset(F: Hypergraph, params: Params, T: Iterable[int]) -> List[Configuration]:
    """
    All 2-configurations whose vertex set contains the t-set ``T``.

    In a k-free hypergraph with k even there are at most (k-2)^2 of them.
    """
    tset = tuple(sorted(set(T)))
    if len(tset) != params.t:
        raise BadArgs(
            f"Expected a {params.t}-set, got {list(tset)}", details={"T": list(tset), "t": params.t}
        )
    if F.m < 2:
        return []
    return _unbounded_list(F, ConfigQuery.for_params(params, 2, must_cover=tset))


def maximal_disjoint_collection(
    F: Hypergraph,
    q: ConfigQuery,
    extra_filter: Optional[ConfigFilter] = None,
    budget: Optional[SearchBudget] = None,
) -> List[Configuration]:
    """
    Greedy inclusion-maximal list of pairwise edge-disjoint configurations.

    Configurations are taken in canonical DFS order; one matching ``q`` and
    ``extra_filter`` is kept when it shares no edge with those already kept.
    The result equals repeatedly asking for the first configuration disjoint
    from everything chosen so far.

    Raises:
        BudgetExhausted: Node limit reached
    """
    used: Set[int] = set(q.disjoint_from)
    chosen: List[Configuration] = []
    stripped = q.model_copy(update={"disjoint_from": frozenset()})
    if q.must_contain & used:
        return chosen

    for config in iter_configurations(F, stripped, budget, blocked=used):
        if config.edge_indices & used:
            continue
        if extra_filter is not None and not extra_filter(config, F):
            continue
        chosen.append(config)
        used |= config.edge_indices
        # must_contain edges are now used; no further disjoint match exists
        if q.must_contain:
            break
    logger.debug(f"Collected {len(chosen)} disjoint configurations (ell={q.ell}, s_max={q.s_max})")
    return chosen


def edges_in_configurations(
    F: Hypergraph,
    ell: int,
    s_max: int,
    budget: Optional[SearchBudget] = None,
    token: Optional[SearchToken] = None,
) -> FrozenSet[int]:
    """
    Indices of edges lying in at least one ell-edge configuration spanning <= s_max.

    A shared ``token`` replaces the per-edge ``budget``; an unlimited token
    makes the scan exhaustive.
    """
    found: Set[int] = set()
    if F.m < ell:
        return frozenset()
    for e in range(F.m):
        if e in found:
            continue
        q = ConfigQuery(ell=ell, s_max=s_max, must_contain=frozenset({e}))
        hit = next(iter_configurations(F, q, budget, token=token), None)
        if hit is not None:
            found |= hit.edge_indices
    return frozenset(found)


def sub_configurations(
    config: Configuration, F: Hypergraph, params: Params, ell: int, minus: bool = False
) -> List[Configuration]:
    """ell-configurations (or ell-minus) formed by edges of ``config``, in canonical order."""
    bound = params.s(ell) - (1 if minus else 0)
    out = []
    for idxs in combinations(config.sorted_indices, ell):
        mask = F.union_mask(idxs)
        if mask.bit_count() <= bound:
            out.append(Configuration(frozenset(idxs), mask.bit_count(), mask))
    return out


def contains_two_configuration(config: Configuration, F: Hypergraph, params: Params) -> bool:
    """True when two edges of ``config`` share at least t vertices."""
    bound = params.s(2)
    return any(
        (F.masks[i] | F.masks[j]).bit_count() <= bound
        for i, j in combinations(config.sorted_indices, 2)
    )


def contains_two_configuration_filter(params: Params) -> ConfigFilter:
    """The predicate form of :func:`contains_two_configuration` for collection searches."""

    def _filter(config: Configuration, F: Hypergraph) -> bool:
        return contains_two_configuration(config, F, params)

    return _filter


def disjointness_splits(params: Params) -> List[Tuple[int, int]]:
    """Splits (a, b) with a + b = k whose a-minus and b-configurations must be edge-disjoint."""
    return [(a, params.k - a) for a in range(2, params.k)]


def _kind_query(
    F: Hypergraph, params: Params, kind: Tuple[int, bool], edge: int
) -> Optional[ConfigQuery]:
    ell, minus = kind
    if ell > F.m or params.s(ell) - (1 if minus else 0) < F.r:
        return None
    return ConfigQuery.for_params(params, ell, minus, must_contain=frozenset({edge}))


def _first_through(
    F: Hypergraph, params: Params, kind: Tuple[int, bool], edge: int
) -> Optional[Configuration]:
    q = _kind_query(F, params, kind, edge)
    if q is None:
        return None
    return next(iter_configurations(F, q, token=create_search_token()), None)


def _pair_through(
    F: Hypergraph,
    params: Params,
    first: Tuple[int, bool],
    second: Tuple[int, bool],
    through: int,
) -> Optional[Tuple[Configuration, Configuration]]:
    # a pair involving ``through`` has it in the first member or in the second
    for own, other_kind, swapped in ((first, second, False), (second, first, True)):
        q = _kind_query(F, params, own, through)
        if q is None:
            continue
        checked: Set[int] = set()
        for config in iter_configurations(F, q, token=create_search_token()):
            for x in config.sorted_indices:
                if x in checked:
                    continue
                checked.add(x)
                other = _first_through(F, params, other_kind, x)
                if other is not None:
                    return (other, config) if swapped else (config, other)
    return None


def find_overlapping_pair(
    F: Hypergraph,
    params: Params,
    first: Tuple[int, bool],
    second: Tuple[int, bool],
    through: Optional[int] = None,
) -> Optional[Tuple[Configuration, Configuration]]:
    """
    A configuration of the ``first`` kind and one of the ``second`` kind sharing an edge.

    Each kind is ``(ell, minus)``. Returns the canonically first pair found
    through the smallest shared edge, or None when every such pair is
    edge-disjoint. With ``through`` only pairs having that edge in one of
    their two configurations are considered.
    """
    (ell_a, minus_a), (ell_b, _) = first, second
    if F.m < max(ell_a, ell_b):
        return None
    if through is not None:
        return _pair_through(F, params, first, second, through)
    s_a = params.s(ell_a) - (1 if minus_a else 0)
    if s_a < F.r:
        return None
    for e in sorted(edges_in_configurations(F, ell_a, s_a, token=create_search_token())):
        other = _first_through(F, params, second, e)
        if other is None:
            continue
        mine = next(iter_configurations(F, _kind_query(F, params, first, e), token=create_search_token()))
        return mine, other
    return None
