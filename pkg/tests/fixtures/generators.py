"""
Seeded random hypergraph generators for property-style tests.

All generators draw from ``numpy.random.Generator(PCG64(seed))`` so every
parametrized case is reproducible.
"""

from typing import List, Optional

import numpy as np

from hyperconf.hypergraph import Hypergraph, Params, build
from hyperconf.models import ConfigQuery
from hyperconf.search import find_configuration


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_edge(rng: np.random.Generator, r: int, n: int) -> tuple:
    return tuple(sorted(rng.choice(n, size=r, replace=False).tolist()))


def random_hypergraph(r: int, n: int, m: int, seed: int) -> Hypergraph:
    """Up to m distinct random r-subsets of range(n)."""
    rng = rng_for(seed)
    edges = set()
    for _ in range(20 * m):
        if len(edges) >= m:
            break
        edges.add(random_edge(rng, r, n))
    return build(r, n, sorted(edges))


def random_k_free(
    params: Params, n: int, seed: int, max_edges: int, attempts: Optional[int] = None
) -> Hypergraph:
    """
    Random k-free r-graph grown by rejecting edges that close a k-configuration.

    Only configurations through the new edge are tested, so the result is
    k-free by induction.
    """
    rng = rng_for(seed)
    edges: List[tuple] = []
    seen = set()
    for _ in range(attempts or 10 * max_edges):
        if len(edges) >= max_edges:
            break
        e = random_edge(rng, params.r, n)
        if e in seen:
            continue
        seen.add(e)
        H = build(params.r, n, edges + [e])
        if H.m >= params.k:
            q = ConfigQuery.for_params(params, params.k, must_contain=frozenset({H.edge_index(e)}))
            if find_configuration(H, q) is not None:
                continue
        edges.append(e)
    return build(params.r, n, edges)


# Three 6-sets pairwise meeting in 3 vertices: a 3-minus configuration at (6, 4)
# with no 2-configuration inside.
THREE_MINUS_GADGET = ((0, 1, 2, 3, 4, 5), (0, 1, 2, 6, 7, 8), (3, 4, 5, 6, 7, 8))

# Four 5-sets on 10 vertices, every vertex in two of them: a 4-minus
# configuration at (5, 3) with no 2- or 3-configuration inside.
FOUR_MINUS_GADGET = ((0, 1, 2, 3, 4), (0, 5, 6, 7, 8), (1, 2, 5, 6, 9), (3, 4, 7, 8, 9))


def planted_k_free(
    params: Params, gadget: tuple, copies: int, n: int, seed: int, extra: int = 0
) -> Hypergraph:
    """
    Vertex-disjoint relabelled copies of ``gadget`` plus up to ``extra`` random edges.

    The copies sit on consecutive blocks of a random vertex permutation; extra
    edges are kept only while the graph stays k-free. The gadget copies
    themselves must already be k-free together.
    """
    rng = rng_for(seed)
    width = 1 + max(v for e in gadget for v in e)
    if copies * width > n:
        raise ValueError(f"{copies} copies of a {width}-vertex gadget do not fit in n={n}")
    perm = rng.permutation(n).tolist()
    edges = []
    for c in range(copies):
        block = perm[c * width : (c + 1) * width]
        edges.extend(tuple(sorted(block[v] for v in e)) for e in gadget)

    seen = set(edges)
    for _ in range(10 * extra):
        if len(edges) >= copies * len(gadget) + extra:
            break
        e = random_edge(rng, params.r, n)
        if e in seen:
            continue
        seen.add(e)
        H = build(params.r, n, edges + [e])
        if H.m >= params.k:
            q = ConfigQuery.for_params(params, params.k, must_contain=frozenset({H.edge_index(e)}))
            if find_configuration(H, q) is not None:
                continue
        edges.append(e)
    return build(params.r, n, edges)
