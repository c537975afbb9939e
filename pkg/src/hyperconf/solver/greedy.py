"""
Seeded greedy packing of constrained r-graphs.

Candidates are visited in a random order drawn from
``numpy.random.Generator(PCG64(seed))`` and kept when the enlarged graph
still satisfies every constraint. All supported constraints are monotone
(a violation survives adding edges), so in exhaustive mode one pass over all
r-subsets yields a maximal graph. Above ``candidate_limit`` r-subsets the
packer samples ``max_attempts`` random r-subsets instead, and maximality is
no longer guaranteed.
"""

from itertools import combinations
from math import comb
from typing import List, Optional

import numpy as np

from hyperconf.hypergraph.core import Configuration, Edge, Hypergraph, Params, build, check_uniformity
from hyperconf.models.search import ConfigQuery
from hyperconf.models.solver import PackConstraints
from hyperconf.search.cancellation import create_search_token
from hyperconf.search.configurations import (
    contains_two_configuration,
    disjointness_splits,
    find_overlapping_pair,
)
from hyperconf.search.engine import is_free, iter_configurations
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)

GENERATOR = "numpy.PCG64"


def _first(H: Hypergraph, q: ConfigQuery) -> Optional[Configuration]:
    return next(iter_configurations(H, q, token=create_search_token()), None)


def _violates(H: Hypergraph, e: int, params: Params, constraints: PackConstraints) -> bool:
    """True when some constraint fails on a configuration through edge ``e``."""
    through = frozenset({e})
    sizes = [(params.k, False)] + [(ell, True) for ell in sorted(constraints.minus_free)]
    for ell, minus in sizes:
        if H.m >= ell and _first(H, ConfigQuery.for_params(params, ell, minus, must_contain=through)):
            return True

    if constraints.no_three_minus_with_two and H.m >= 3:
        q3 = ConfigQuery.for_params(params, 3, minus=True, must_contain=through)
        token = create_search_token()
        if any(contains_two_configuration(c, H, params) for c in iter_configurations(H, q3, token=token)):
            return True
    if constraints.split_disjoint:
        for a, b in disjointness_splits(params):
            if find_overlapping_pair(H, params, (a, True), (b, False), through=e) is not None:
                return True
    return False


def _try_add(
    edges: List[Edge], candidate: Edge, params: Params, n: int, constraints: PackConstraints
) -> bool:
    H = Hypergraph(params.r, n, tuple(sorted(edges + [candidate])))
    idx = H.edge_index(candidate)
    if _violates(H, idx, params, constraints):
        return False
    edges.append(candidate)
    return True


def greedy_pack(
    params: Params,
    n: int,
    seed: int = 0,
    constraints: Optional[PackConstraints] = None,
) -> Hypergraph:
    """
    Build a constrained r-graph on n vertices by seeded random greedy insertion.

    Args:
        params: (r, t, k); the result is always k-free
        n: Number of vertices
        seed: Seed for the PCG64 generator
        constraints: Extra minus-freeness and structural constraints

    Returns:
        Canonical hypergraph; identical for identical arguments

    Example:
        >>> F = greedy_pack(Params(3, 2, 2), 7, seed=1)
        >>> verify_witness(F, Params(3, 2, 2))
        True
    """
    constraints = constraints or PackConstraints()
    r = params.r
    rng = np.random.Generator(np.random.PCG64(seed))
    edges: List[Edge] = []

    total = comb(n, r) if n >= r else 0
    if total <= constraints.candidate_limit:
        candidates = list(combinations(range(n), r))
        for j in rng.permutation(len(candidates)).tolist():
            _try_add(edges, candidates[j], params, n, constraints)
        mode = "exhaustive"
    else:
        seen = set()
        for _ in range(constraints.max_attempts):
            candidate = tuple(sorted(rng.choice(n, size=r, replace=False).tolist()))
            if candidate in seen:
                continue
            seen.add(candidate)
            _try_add(edges, candidate, params, n, constraints)
        mode = "sampled"

    F = build(r, n, edges)
    logger.info(
        f"Greedy pack ({mode}, {GENERATOR}, seed={seed}) at ({params.r},{params.t},{params.k}), "
        f"n={n}: {F.m} edges"
    )
    return F


def verify_witness(F: Hypergraph, params: Params) -> bool:
    """
    Re-check k-freeness of F from scratch.

    Example:
        >>> verify_witness(build(3, 7, []), Params(3, 2, 2))
        True
    """
    check_uniformity(F, params)
    if F.m < params.k:
        return True
    return is_free(F, params, params.k)
