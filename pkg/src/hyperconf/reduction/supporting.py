"""
Supporting t-graphs and non-edge girth.

``supporting_J`` builds the canonical supporting graph J(F): the t-sets lying
inside the vertex set of some l-configuration with l <= floor(k/2). The
non-edge girth of (F, J) is the smallest g such that some g-configuration
spans a t-set missing from J.
"""

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Optional, Set, Union

from hyperconf.exceptions.errors import BadArgs, HypothesisViolated, NotSupporting
from hyperconf.hypergraph.core import (
    Hypergraph,
    Params,
    TGraph,
    check_uniformity,
    t_shadow,
    t_subsets_of_mask,
)
from hyperconf.models.search import ConfigQuery
from hyperconf.search.cancellation import create_search_token
from hyperconf.search.engine import is_free, iter_configurations
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


class Girth(Enum):
    EXCEEDS_CAP = "exceeds_cap"


GirthResult = Union[int, Girth]


def _config_spans(F: Hypergraph, params: Params, ell: int) -> Set[int]:
    if F.m < ell:
        return set()
    q = ConfigQuery.for_params(params, ell)
    return {c.mask for c in iter_configurations(F, q, token=create_search_token())}


def supporting_J(F: Hypergraph, params: Params) -> TGraph:
    """
    The supporting t-graph J(F).

    Args:
        F: Hypergraph
        params: (r, t, k); configurations of up to floor(k/2) edges contribute

    Returns:
        TGraph containing the t-shadow of F

    Example:
        >>> len(supporting_J(build(3, 4, [[0, 1, 2], [1, 2, 3]]), Params(3, 2, 5)))
        6
    """
    check_uniformity(F, params)
    spans: Set[int] = set(F.masks)
    for ell in range(2, params.k // 2 + 1):
        spans |= _config_spans(F, params, ell)
    members = {T for mask in spans for T in t_subsets_of_mask(mask, params.t)}
    return TGraph(params.t, frozenset(members))


def check_supporting(F: Hypergraph, J: TGraph) -> None:
    """Raise NotSupporting when J misses a member of F's t-shadow."""
    missing = t_shadow(F, J.t).members - J.members
    if missing:
        first = min(missing)
        raise NotSupporting(
            f"J misses {len(missing)} shadow t-sets, e.g. {list(first)}",
            details={"missing": len(missing), "example": list(first)},
        )


def non_edge_girth(F: Hypergraph, J: TGraph, g_cap: int) -> GirthResult:
    """
    Smallest g <= g_cap such that a g-configuration spans a non-edge of J.

    Args:
        F: Hypergraph
        J: Supporting t-graph of F
        g_cap: Largest configuration size examined (callers usually pass k)

    Returns:
        The girth, or ``Girth.EXCEEDS_CAP`` when no g <= g_cap qualifies

    Raises:
        NotSupporting: J does not contain the t-shadow of F
    """
    if g_cap < 1:
        raise BadArgs(f"g_cap must be >= 1, got {g_cap}", details={"g_cap": g_cap})
    if not 1 <= J.t < F.r:
        raise BadArgs(f"J has t={J.t}, need 1 <= t < r={F.r}", details={"t": J.t, "r": F.r})
    check_supporting(F, J)

    # k only sizes the query; the span ceilings depend on r and t
    params = Params(F.r, J.t, 2)
    checked: Set[int] = set()
    # g = 1 never qualifies: single edges lie in the shadow
    for g in range(2, min(g_cap, F.m) + 1):
        q = ConfigQuery.for_params(params, g)
        for config in iter_configurations(F, q, token=create_search_token()):
            if config.mask in checked:
                continue
            checked.add(config.mask)
            if any(T not in J.members for T in t_subsets_of_mask(config.mask, J.t)):
                logger.debug(f"Non-edge girth {g} witnessed by edges {config.sorted_indices}")
                return g
    return Girth.EXCEEDS_CAP


def packing_lower_bound(F: Hypergraph, J: TGraph, params: Params) -> Fraction:
    """
    The packing lower bound |F| / (t! |J|) after checking its hypotheses on (F, J).

    Hypotheses: r >= 3 and 2 <= t <= r-1, F is k-free and l-minus-free for
    every l in [2, k-1], J is supporting, and the non-edge girth of (F, J)
    exceeds k/2.

    Raises:
        HypothesisViolated: One of the hypotheses fails (``which`` names it)

    Example:
        >>> F = build(3, 3, [[0, 1, 2]])
        >>> packing_lower_bound(F, t_shadow(F, 2), Params(3, 2, 4))
        Fraction(1, 6)
    """
    check_uniformity(F, params)
    if params.r < 3 or params.t < 2:
        raise HypothesisViolated("r>=3 and t>=2", details={"r": params.r, "t": params.t})
    if F.m == 0:
        raise HypothesisViolated("nonempty", message="The packing bound needs at least one edge")
    if J.t != params.t:
        raise HypothesisViolated("J has order t", details={"J_t": J.t, "t": params.t})
    if not is_free(F, params, params.k):
        raise HypothesisViolated("k-free")
    for ell in range(2, params.k):
        if not is_free(F, params, ell, minus=True):
            raise HypothesisViolated(f"{ell}-minus-free", details={"ell": ell})
    try:
        check_supporting(F, J)
    except NotSupporting as e:
        raise HypothesisViolated("supporting", details=e.details) from e
    girth: Optional[GirthResult] = non_edge_girth(F, J, params.k // 2)
    if girth is not Girth.EXCEEDS_CAP:
        raise HypothesisViolated("non-edge girth > k/2", details={"girth": girth})
    return Fraction(F.m, factorial(params.t) * len(J))
