"""
Pruned depth-first search for configurations.

The search walks edge-index combinations in increasing order over vertex
bitsets. A partial selection is cut when its span exceeds ``s_max`` or when
no later candidate can be added without exceeding it (span plus the smallest
number of new vertices any remaining candidate brings). With ``must_cover``
set, a branch is also cut once the union of everything still reachable
misses a required vertex. Configurations are never assumed to be connected.
"""

from multiprocessing import Pool
from typing import Callable, Iterator, List, Optional, Sequence, Set, Tuple

from hyperconf.exceptions.errors import InvalidQuery
from hyperconf.hypergraph.core import Configuration, Hypergraph, Params, mask_of
from hyperconf.models.search import ConfigQuery, SearchBudget
from hyperconf.search.cancellation import SearchToken, create_search_token
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)

ConfigFilter = Callable[[Configuration, Hypergraph], bool]


def check_query(F: Hypergraph, q: ConfigQuery) -> None:
    """
    Validate a query against a hypergraph.

    Raises:
        InvalidQuery: s_max below r or a must_contain index out of range
    """
    if q.s_max < F.r:
        raise InvalidQuery(
            f"s_max={q.s_max} is below the uniformity r={F.r}",
            details={"s_max": q.s_max, "r": F.r},
        )
    bad = sorted(i for i in q.must_contain | q.disjoint_from if not 0 <= i < F.m)
    if bad:
        raise InvalidQuery(
            f"Edge indices out of range for {F.m} edges: {bad}",
            details={"indices": bad, "m": F.m},
        )


def _search(
    F: Hypergraph,
    q: ConfigQuery,
    token: SearchToken,
    blocked: Optional[Set[int]] = None,
) -> Iterator[Tuple[int, ...]]:
    masks = F.masks
    s_max = q.s_max
    base = tuple(sorted(q.must_contain))
    base_mask = F.union_mask(base)
    cover = mask_of(q.must_cover) if q.must_cover else 0

    if base_mask.bit_count() > s_max:
        return
    need = q.ell - len(base)
    excluded = q.must_contain | q.disjoint_from
    cand = [i for i in range(F.m) if i not in excluded]
    if need > len(cand):
        return

    # suffix[j] = union of candidate masks from position j on
    suffix = [0] * (len(cand) + 1)
    for j in range(len(cand) - 1, -1, -1):
        suffix[j] = suffix[j + 1] | masks[cand[j]]

    chosen: List[int] = []

    def rec(start: int, need: int, mask: int) -> Iterator[Tuple[int, ...]]:
        token.throw_if_exhausted()
        if need == 0:
            if mask & cover == cover:
                yield tuple(sorted(base + tuple(chosen)))
            return
        for j in range(start, len(cand) - need + 1):
            if cover and (mask | suffix[j]) & cover != cover:
                break
            idx = cand[j]
            if blocked is not None and idx in blocked:
                continue
            new_mask = mask | masks[idx]
            size = new_mask.bit_count()
            if size > s_max:
                continue
            if need > 1 and size + _min_extra(masks, cand, j + 1, new_mask, blocked) > s_max:
                continue
            chosen.append(idx)
            yield from rec(j + 1, need - 1, new_mask)
            chosen.pop()

    yield from rec(0, need, base_mask)


def _min_extra(
    masks: Sequence[int], cand: Sequence[int], start: int, mask: int, blocked: Optional[Set[int]]
) -> int:
    best = None
    for idx in cand[start:]:
        if blocked is not None and idx in blocked:
            continue
        extra = (masks[idx] & ~mask).bit_count()
        if best is None or extra < best:
            best = extra
            if best == 0:
                break
    # nothing left to add: the branch is infeasible
    return best if best is not None else 1 << 30


def _as_configuration(F: Hypergraph, idxs: Sequence[int]) -> Configuration:
    mask = F.union_mask(idxs)
    return Configuration(frozenset(idxs), mask.bit_count(), mask)


def iter_configurations(
    F: Hypergraph,
    q: ConfigQuery,
    budget: Optional[SearchBudget] = None,
    token: Optional[SearchToken] = None,
    blocked: Optional[Set[int]] = None,
) -> Iterator[Configuration]:
    """
    Lazily yield configurations matching ``q`` in canonical DFS order.

    Args:
        F: Hypergraph to search
        q: Query
        budget: Node limit (default from settings); ignored when ``token`` is given
        token: Shared node counter
        blocked: Live set of edge indices to skip; callers may grow it while iterating

    Raises:
        InvalidQuery: Query inconsistent with F
        BudgetExhausted: Node limit reached before the space was exhausted
    """
    check_query(F, q)
    if token is None:
        budget = budget or SearchBudget()
        token = create_search_token(max_nodes=budget.max_nodes)
    for idxs in _search(F, q, token, blocked):
        yield _as_configuration(F, idxs)


def find_configuration(
    F: Hypergraph, q: ConfigQuery, budget: Optional[SearchBudget] = None, workers: int = 1
) -> Optional[Configuration]:
    """
    First configuration matching ``q``, or None when none exists.

    With ``workers > 1`` the top-level branches run in a process pool and the
    first hit of the earliest branch is returned, which is the same
    configuration the sequential search finds. Each branch gets the full node
    limit.

    Example:
        >>> F = build(3, 4, [[0, 1, 2], [1, 2, 3]])
        >>> find_configuration(F, ConfigQuery(ell=2, s_max=4)).span
        4
    """
    if workers > 1 and q.ell > len(q.must_contain):
        check_query(F, q)
        return _first_in_pool(F, q, (budget or SearchBudget()).max_nodes, workers)
    return next(iter_configurations(F, q, budget), None)


def _branch_worker(args: Tuple[Hypergraph, ConfigQuery, int]) -> List[Tuple[int, ...]]:
    F, q, max_nodes = args
    token = create_search_token(max_nodes=max_nodes)
    return list(_search(F, q, token))


def _top_level_branches(F: Hypergraph, q: ConfigQuery) -> List[ConfigQuery]:
    # branch j fixes the j-th free candidate as the smallest chosen index
    excluded = q.must_contain | q.disjoint_from
    cand = [i for i in range(F.m) if i not in excluded]
    return [
        q.model_copy(
            update={
                "must_contain": q.must_contain | {idx},
                "disjoint_from": q.disjoint_from | frozenset(cand[:j]),
            }
        )
        for j, idx in enumerate(cand)
    ]


def _branch_first(args: Tuple[Hypergraph, ConfigQuery, Optional[int]]) -> Optional[Tuple[int, ...]]:
    F, q, max_nodes = args
    return next(_search(F, q, create_search_token(max_nodes=max_nodes)), None)


def _first_in_pool(
    F: Hypergraph, q: ConfigQuery, max_nodes: Optional[int], workers: int
) -> Optional[Configuration]:
    branches = _top_level_branches(F, q)
    logger.debug(f"Searching {len(branches)} top-level branches on {workers} workers")
    with Pool(processes=min(workers, max(1, len(branches)))) as pool:
        # imap keeps branch order; leaving the block terminates the rest
        for idxs in pool.imap(_branch_first, [(F, b, max_nodes) for b in branches]):
            if idxs is not None:
                return _as_configuration(F, idxs)
    return None


def enumerate_configurations(
    F: Hypergraph,
    q: ConfigQuery,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> List[Configuration]:
    """
    All configurations matching ``q`` (up to ``budget.max_results``).

    With ``workers > 1`` the top-level branches run in a process pool and the
    results are merged in canonical order; each branch gets the full node
    limit.

    Example:
        >>> F = build(3, 4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
        >>> len(enumerate_configurations(F, ConfigQuery(ell=2, s_max=4)))
        6
    """
    budget = budget or SearchBudget()
    check_query(F, q)

    if workers > 1 and q.ell > len(q.must_contain):
        branches = _top_level_branches(F, q)
        logger.debug(f"Enumerating {len(branches)} top-level branches on {workers} workers")
        results: List[Configuration] = []
        with Pool(processes=min(workers, max(1, len(branches)))) as pool:
            for idx_lists in pool.imap(
                _branch_worker, [(F, b, budget.max_nodes) for b in branches]
            ):
                for idxs in idx_lists:
                    results.append(_as_configuration(F, idxs))
                    if len(results) >= budget.max_results:
                        return results
        return results

    results = []
    for config in iter_configurations(F, q, budget):
        results.append(config)
        if len(results) >= budget.max_results:
            logger.warning(f"Enumeration truncated at max_results={budget.max_results}")
            break
    return results


def is_free(F: Hypergraph, params: Params, ell: int, minus: bool = False) -> bool:
    """
    True iff F has no ell-configuration (ell-minus with ``minus``).

    Runs to exhaustion without a node limit.

    Example:
        >>> is_free(build(3, 4, [[0, 1, 2], [1, 2, 3]]), Params(3, 2, 2), 2)
        False
    """
    if ell < 2:
        raise InvalidQuery(f"Freeness needs ell >= 2, got {ell}", details={"ell": ell})
    return find_witness(F, params, ell, minus) is None


def find_witness(
    F: Hypergraph, params: Params, ell: int, minus: bool = False, workers: int = 1
) -> Optional[Configuration]:
    """The canonically first ell-configuration (or ell-minus), searched without limits."""
    if F.m < ell:
        return None
    q = ConfigQuery.for_params(params, ell, minus)
    if workers > 1:
        check_query(F, q)
        return _first_in_pool(F, q, None, workers)
    return next(iter_configurations(F, q, token=create_search_token()), None)
