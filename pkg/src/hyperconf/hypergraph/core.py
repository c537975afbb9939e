"""
Canonical r-uniform hypergraphs and the elementary set computations.

Every other module works on the types defined here: an immutable
:class:`Hypergraph` whose edges are kept in lexicographic order together with
their vertex bitsets, the parameter triple :class:`Params`, edge-index
:class:`Configuration` objects, t-graphs (:class:`TGraph`) and the cover-count
view :class:`CoverProfile`. Vertex ids are dense integers ``0..n-1``; the
bitset of an edge is a Python ``int`` with bit ``v`` set for each vertex ``v``,
so the span of a set of edges is the popcount of the OR of their masks.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from hyperconf.exceptions.errors import (
    BadArgs,
    BadT,
    DuplicateEdge,
    HypergraphTooLarge,
    IndexOutOfRange,
    InvalidParams,
    NonUniformEdge,
    VertexOutOfRange,
)
from hyperconf.utils.config import get_config
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, ...]
TSet = Tuple[int, ...]


def mask_of(vertices: Iterable[int]) -> int:
    """Bitset with one bit per vertex id."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    """Increasing vertex ids of a bitset."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def t_subsets_of_mask(mask: int, t: int) -> Iterator[TSet]:
    """All t-subsets (as increasing tuples) of the vertex set of ``mask``."""
    return combinations(vertices_of(mask), t)


@dataclass(frozen=True)
class Params:
    """
    The parameter triple (r, t, k).

    ``s(ell) = ell*(r-t) + t`` is the span ceiling of an ell-configuration; an
    ell-minus configuration spans at most ``s(ell) - 1`` vertices.
    """

    r: int
    t: int
    k: int

    def __post_init__(self) -> None:
        if not (self.r > self.t >= 1):
            raise InvalidParams(
                f"Need r > t >= 1, got r={self.r}, t={self.t}",
                details={"r": self.r, "t": self.t, "k": self.k},
            )
        if self.k < 2:
            raise InvalidParams(f"Need k >= 2, got k={self.k}", details={"k": self.k})

    def s(self, ell: int) -> int:
        return ell * (self.r - self.t) + self.t

    def config_bound(self, ell: int, minus: bool = False) -> int:
        return config_bound(self, ell, minus)

    @property
    def binom_rt(self) -> int:
        """C(r, t): the number of t-subsets of one edge."""
        return comb(self.r, self.t)

    def with_k(self, k: int) -> "Params":
        return Params(self.r, self.t, k)


def config_bound(params: Params, ell: int, minus: bool = False) -> int:
    """
    Span ceiling of an ell-configuration (``minus`` for an ell-minus one).

    Example:
        >>> config_bound(Params(3, 2, 5), 5)
        7
        >>> config_bound(Params(3, 2, 5), 2, minus=True)
        3
    """
    if ell < 1:
        raise BadArgs(f"Configuration size must be >= 1, got {ell}", details={"ell": ell})
    bound = ell * (params.r - params.t) + params.t
    return bound - 1 if minus else bound


@dataclass(frozen=True)
class Hypergraph:
    """
    An r-uniform hypergraph on vertices ``0..n-1`` in canonical form.

    Edges are strictly increasing vertex tuples, pairwise distinct, stored in
    lexicographic order. Use :func:`build` to construct one from raw input;
    the constructor itself trusts its arguments.
    """

    r: int
    n: int
    edges: Tuple[Edge, ...]
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "masks", tuple(mask_of(e) for e in self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, edge: Iterable[int]) -> Optional[int]:
        """Index of ``edge`` in the canonical order, or None if absent."""
        return self._index.get(tuple(sorted(edge)))

    def check_indices(self, idxs: Iterable[int]) -> FrozenSet[int]:
        chosen = frozenset(idxs)
        bad = sorted(i for i in chosen if not 0 <= i < len(self.edges))
        if bad:
            raise IndexOutOfRange(
                f"Edge indices out of range for {len(self.edges)} edges: {bad}",
                details={"indices": bad, "m": len(self.edges)},
            )
        return chosen

    def union_mask(self, idxs: Iterable[int]) -> int:
        mask = 0
        for i in idxs:
            mask |= self.masks[i]
        return mask

    def subgraph(self, idxs: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph keeping the given edge indices (same r, n)."""
        keep = sorted(self.check_indices(idxs))
        return Hypergraph(self.r, self.n, tuple(self.edges[i] for i in keep))

    def without(self, idxs: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph with the given edge indices removed."""
        drop = self.check_indices(idxs)
        return Hypergraph(
            self.r, self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop)
        )

    def with_edge(self, edge: Iterable[int]) -> "Hypergraph":
        """Super-hypergraph with one more edge (validated like :func:`build`)."""
        return build(self.r, self.n, list(self.edges) + [tuple(edge)])

    def is_subgraph_of(self, other: "Hypergraph") -> bool:
        return self.r == other.r and set(self.edges) <= set(other.edges)


def build(r: int, n: int, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """
    Build a canonical hypergraph from raw edges.

    Args:
        r: Uniformity (>= 2)
        n: Number of vertices (>= r)
        raw_edges: Iterable of vertex collections, each of r distinct ids < n

    Returns:
        Hypergraph with edges sorted lexicographically

    Raises:
        NonUniformEdge: An edge does not have exactly r distinct vertices
        VertexOutOfRange: A vertex id is negative or >= n
        DuplicateEdge: The same vertex set appears twice
        HypergraphTooLarge: n exceeds the configured vertex cap

    Example:
        >>> build(3, 4, [{1, 2, 3}, {2, 3, 0}]).edges
        ((0, 2, 3), (1, 2, 3))
    """
    if r < 2:
        raise InvalidParams(f"Uniformity must be >= 2, got {r}", details={"r": r})
    if n < r:
        raise InvalidParams(f"Need n >= r, got n={n}, r={r}", details={"n": n, "r": r})
    cap = get_config().max_vertices
    if n > cap:
        raise HypergraphTooLarge(
            f"n={n} exceeds the vertex cap {cap}", details={"n": n, "max_vertices": cap}
        )

    seen = set()
    edges: List[Edge] = []
    for raw in raw_edges:
        items = list(raw)
        vertex_set = set(items)
        if len(items) != r or len(vertex_set) != r:
            raise NonUniformEdge(
                f"Edge {items} does not have exactly {r} distinct vertices",
                details={"edge": items, "r": r},
            )
        out_of_range = sorted(v for v in vertex_set if not 0 <= v < n)
        if out_of_range:
            raise VertexOutOfRange(
                f"Edge {sorted(vertex_set)} has vertices outside [0, {n})",
                details={"edge": sorted(vertex_set), "vertices": out_of_range, "n": n},
            )
        edge = tuple(sorted(vertex_set))
        if edge in seen:
            raise DuplicateEdge(f"Duplicate edge {list(edge)}", details={"edge": list(edge)})
        seen.add(edge)
        edges.append(edge)

    edges.sort()
    return Hypergraph(r, n, tuple(edges))


@dataclass(frozen=True)
class Configuration:
    """A set of edge indices of a hypergraph with its cached vertex span."""

    edge_indices: FrozenSet[int]
    span: int
    mask: int = field(default=0, compare=False, repr=False)

    @classmethod
    def of(cls, F: Hypergraph, idxs: Iterable[int]) -> "Configuration":
        chosen = F.check_indices(idxs)
        mask = F.union_mask(chosen)
        return cls(chosen, mask.bit_count(), mask)

    @property
    def size(self) -> int:
        return len(self.edge_indices)

    @property
    def sorted_indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.edge_indices))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return vertices_of(self.mask)

    def edges_in(self, F: Hypergraph) -> List[Edge]:
        return [F.edges[i] for i in self.sorted_indices]

    def is_config(self, params: Params) -> bool:
        return self.span <= params.s(self.size)

    def is_minus_config(self, params: Params) -> bool:
        return self.span <= params.s(self.size) - 1


def span(F: Hypergraph, idxs: Iterable[int]) -> int:
    """
    Number of vertices covered by the indexed edges.

    Example:
        >>> span(build(3, 4, [[0, 1, 2], [1, 2, 3]]), {0, 1})
        4
    """
    return F.union_mask(F.check_indices(idxs)).bit_count()


@dataclass(frozen=True)
class TGraph:
    """A set of t-element vertex subsets (shadows, supporting graphs)."""

    t: int
    members: FrozenSet[TSet]

    def __post_init__(self) -> None:
        for member in self.members:
            if len(member) != self.t or any(a >= b for a, b in zip(member, member[1:])):
                raise BadT(
                    f"Member {member} is not a strictly increasing {self.t}-tuple",
                    details={"member": list(member), "t": self.t},
                )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def __iter__(self) -> Iterator[TSet]:
        return iter(sorted(self.members))

    def issuperset(self, other: "TGraph") -> bool:
        return self.members >= other.members

    def union(self, other: "TGraph") -> "TGraph":
        return TGraph(self.t, self.members | other.members)

    def difference(self, other: "TGraph") -> "TGraph":
        return TGraph(self.t, self.members - other.members)


def _check_t(F: Hypergraph, t: int) -> None:
    if not 1 <= t <= F.r:
        raise BadT(f"t must lie in [1, {F.r}], got {t}", details={"t": t, "r": F.r})


def t_shadow(F: Hypergraph, t: int) -> TGraph:
    """
    The t-shadow: all t-subsets of edges of F.

    Example:
        >>> len(t_shadow(build(3, 4, [[0, 1, 2], [1, 2, 3]]), 2))
        5
    """
    _check_t(F, t)
    return TGraph(t, frozenset(T for e in F.edges for T in combinations(e, t)))


@dataclass(frozen=True)
class CoverProfile:
    """
    How often each t-set is covered by an edge.

    ``histogram[i]`` is the number of t-sets covered exactly i times. When
    zero-covered sets were requested, ``histogram[0]`` is always present; the
    zero entries of ``counts`` exist only when ``zero_materialized`` is set.
    """

    t: int
    n: int
    num_edges: int
    counts: Mapping[TSet, int]
    histogram: Mapping[int, int]
    zero_materialized: bool = False

    def j(self, i: int) -> int:
        return self.histogram.get(i, 0)

    def j_at_least(self, i: int) -> int:
        return sum(c for mult, c in self.histogram.items() if mult >= i)

    def total_incidences(self) -> int:
        return sum(mult * c for mult, c in self.histogram.items())


def cover_profile(F: Hypergraph, t: int, include_zero: bool = False) -> CoverProfile:
    """
    Count, for every t-set, the edges containing it.

    Args:
        F: Hypergraph
        t: Subset size in [1, r]
        include_zero: Report zero-covered t-sets over [0, n)

    Returns:
        CoverProfile with counts and the multiplicity histogram

    Example:
        >>> profile = cover_profile(build(3, 4, [[0, 1, 2], [0, 1, 3]]), 2, include_zero=True)
        >>> profile.j(2), profile.j(1), profile.j(0)
        (1, 4, 1)
    """
    _check_t(F, t)
    counts: Dict[TSet, int] = Counter(T for e in F.edges for T in combinations(e, t))
    histogram: Dict[int, int] = dict(Counter(counts.values()))
    materialized = False

    if include_zero:
        settings = get_config()
        if t <= settings.zero_enumeration_max_t and F.n <= settings.zero_enumeration_max_n:
            counts = dict(counts)
            for T in combinations(range(F.n), t):
                counts.setdefault(T, 0)
            materialized = True
        histogram[0] = comb(F.n, t) - len([c for c in counts.values() if c > 0])

    return CoverProfile(
        t=t,
        n=F.n,
        num_edges=F.m,
        counts=dict(counts),
        histogram=histogram,
        zero_materialized=materialized,
    )


def t_tight_components(F: Hypergraph, t: int) -> Tuple[FrozenSet[int], ...]:
    """
    Partition edge indices into t-tight components.

    Two edges are linked when they share at least t vertices; components are
    the connected components of that relation, ordered by smallest index.

    Example:
        >>> t_tight_components(build(3, 7, [[0, 1, 2], [1, 2, 3], [4, 5, 6]]), 2)
        (frozenset({0, 1}), frozenset({2}))
    """
    _check_t(F, t)
    graph = nx.Graph()
    graph.add_nodes_from(range(F.m))
    holders: Dict[TSet, List[int]] = {}
    for i, e in enumerate(F.edges):
        for T in combinations(e, t):
            holders.setdefault(T, []).append(i)
    for idxs in holders.values():
        graph.add_edges_from(zip(idxs, idxs[1:]))

    components = [frozenset(c) for c in nx.connected_components(graph)]
    components.sort(key=min)
    return tuple(components)


def check_uniformity(F: Hypergraph, params: Params) -> None:
    """Raise InvalidParams when ``params.r`` differs from the hypergraph's uniformity."""
    if F.r != params.r:
        raise InvalidParams(
            f"Hypergraph is {F.r}-uniform but params have r={params.r}",
            details={"hypergraph_r": F.r, "params_r": params.r},
        )
