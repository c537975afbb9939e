"""
Exact f(n; k(r-t)+t, k) by branch and bound over r-subsets.

Candidates are the r-subsets of ``0..n-1`` in lexicographic order, as
vertex bitsets. A node holds the chosen edges and the list of candidates
that can still be added without closing a k-configuration; choosing an edge
re-filters that list by testing only configurations through both the new
edge and the candidate. The bound at a node is

    |S| + min(|avail|, floor(cap / C(r,t)))

where ``cap`` sums, over t-sets, the smaller of the remaining coverage
allowance ``k-1-cov(T)`` and the number of available candidates containing
T. It never exceeds the plain coverage capacity
floor(((k-1) C(n,t) - sum cov) / C(r,t)).
"""

import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hyperconf.exceptions.errors import BadArgs, ClaimViolation
from hyperconf.hypergraph.core import Hypergraph, Params, build, check_uniformity, mask_of
from hyperconf.models.solver import SolverOptions
from hyperconf.search.cancellation import SearchToken, create_search_token
from hyperconf.solver.greedy import greedy_pack, verify_witness
from hyperconf.utils.config import get_config
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)

# transpositions are taken among the first this many vertices
_SYMMETRY_VERTICES = 8


@dataclass(frozen=True)
class SolverResult:
    params: Params
    n: int
    optimum: int
    witness: Hypergraph
    nodes_explored: int
    complete: bool
    wall_time: float
    stop_reason: Optional[str] = None

    def to_record(self) -> Dict[str, Any]:
        return {
            "r": self.params.r,
            "t": self.params.t,
            "k": self.params.k,
            "n": self.n,
            "optimum": self.optimum,
            "complete": self.complete,
            "nodes": self.nodes_explored,
            "wall_time": round(self.wall_time, 3),
            "stop_reason": self.stop_reason,
        }

    def to_text(self) -> str:
        return f"optimum {self.optimum}, {'complete' if self.complete else 'incomplete'}"


def _closes(chosen: Sequence[int], base: int, need: int, s_max: int, start: int = 0) -> bool:
    """True when ``need`` masks from ``chosen[start:]`` bring ``base`` to a span <= s_max."""
    if base.bit_count() > s_max:
        return False
    if need == 0:
        return True
    for j in range(start, len(chosen) - need + 1):
        if _closes(chosen, base | chosen[j], need - 1, s_max, j + 1):
            return True
    return False


class _BranchAndBound:
    def __init__(self, params: Params, n: int, opts: SolverOptions, token: SearchToken):
        self.params = params
        self.n = n
        self.opts = opts
        self.token = token
        self.s_max = params.s(params.k)
        self.candidates: List[Tuple[int, ...]] = list(combinations(range(n), params.r))
        self.masks = [mask_of(c) for c in self.candidates]
        t_index = {T: i for i, T in enumerate(combinations(range(n), params.t))}
        self.tsets = [tuple(t_index[T] for T in combinations(c, params.t)) for c in self.candidates]
        self.cov = [0] * len(t_index)
        self.best: List[int] = []
        self.chosen: List[int] = []
        self.perms = self._transposition_perms() if opts.symmetry_pruning else []

    def _transposition_perms(self) -> List[Tuple[List[int], List[bool]]]:
        position = {c: i for i, c in enumerate(self.candidates)}
        out = []
        for a, b in combinations(range(min(self.n, _SYMMETRY_VERTICES)), 2):
            swap = {a: b, b: a}
            perm = [position[tuple(sorted(swap.get(v, v) for v in c))] for c in self.candidates]
            # closed[i]: the transposition maps the first i candidates onto themselves
            closed, high = [True], -1
            for i, p in enumerate(perm):
                high = max(high, p)
                closed.append(high == i)
            out.append((perm, closed))
        return out

    def _dominated(self, prefix: int) -> bool:
        """Some transposition maps the decided prefix to a preferred one."""
        chosen = set(self.chosen)
        for perm, closed in self.perms:
            if not closed[prefix]:
                continue
            image = {perm[i] for i in chosen}
            diff = chosen ^ image
            if diff and min(diff) in image:
                return True
        return False

    def _bound(self, avail: Sequence[int]) -> int:
        limit = self.params.k - 1
        avail_cover: Counter = Counter(T for c in avail for T in self.tsets[c])
        cap = sum(min(limit - self.cov[T], count) for T, count in avail_cover.items())
        return len(self.chosen) + min(len(avail), cap // self.params.binom_rt)

    def _include(self, c: int) -> None:
        self.chosen.append(c)
        for T in self.tsets[c]:
            self.cov[T] += 1

    def _exclude_last(self) -> None:
        c = self.chosen.pop()
        for T in self.tsets[c]:
            self.cov[T] -= 1

    def search(self, avail: List[int]) -> None:
        if self.token.tick():
            return
        if len(self.chosen) > len(self.best):
            self.best = list(self.chosen)
            logger.debug(f"Incumbent improved to {len(self.best)} edges")
        need = self.params.k - 2
        for pos, c in enumerate(avail):
            rest = avail[pos + 1:]
            if self._bound(avail[pos:]) <= len(self.best):
                return
            chosen_masks = [self.masks[i] for i in self.chosen]
            self._include(c)
            if not (self.perms and self._dominated(c + 1)):
                filtered = [
                    d
                    for d in rest
                    if not _closes(chosen_masks, self.masks[c] | self.masks[d], need, self.s_max)
                ]
                self.search(filtered)
            self._exclude_last()
            if self.token.is_cancelled:
                return


def exact_f(params: Params, n: int, opts: Optional[SolverOptions] = None) -> SolverResult:
    """
    Maximum number of edges of a k-free r-graph on n vertices.

    The incumbent starts from ``opts.incumbent_seed`` or a greedy packing. A
    node or time limit stops the search with ``complete=False`` and the best
    incumbent found so far.

    Raises:
        BadArgs: n < r, too many candidate edges, or an invalid incumbent seed
        ClaimViolation: The returned witness fails re-verification

    Example:
        >>> exact_f(Params(3, 2, 2), 7).to_text()
        'optimum 7, complete'
    """
    opts = opts or SolverOptions()
    if n < params.r:
        raise BadArgs(f"Need n >= r, got n={n}, r={params.r}", details={"n": n, "r": params.r})
    candidates = comb(n, params.r)
    limit = get_config().pack_candidate_limit
    if candidates > limit:
        raise BadArgs(
            f"C({n},{params.r})={candidates} candidate edges exceed the limit {limit}",
            details={"candidates": candidates, "limit": limit},
        )

    if opts.incumbent_seed is not None:
        seed_graph = opts.incumbent_seed
        check_uniformity(seed_graph, params)
        if seed_graph.n != n or not verify_witness(seed_graph, params):
            raise BadArgs("Incumbent seed must be a k-free graph on the same n vertices")
    else:
        seed_graph = greedy_pack(params, n, seed=opts.seed)

    started = time.monotonic()
    token = create_search_token(max_nodes=opts.node_limit, time_limit=opts.time_limit)
    bnb = _BranchAndBound(params, n, opts, token)
    position = {c: i for i, c in enumerate(bnb.candidates)}
    bnb.best = [position[e] for e in seed_graph.edges]
    logger.info(
        f"Solving ({params.r},{params.t},{params.k}) at n={n}: {candidates} candidates, "
        f"incumbent {len(bnb.best)}"
    )

    bnb.search(list(range(len(bnb.candidates))))

    witness = build(params.r, n, [bnb.candidates[i] for i in bnb.best])
    if not verify_witness(witness, params):
        raise ClaimViolation("Solver witness contains a k-configuration", details={"n": n})
    result = SolverResult(
        params=params,
        n=n,
        optimum=witness.m,
        witness=witness,
        nodes_explored=token.nodes,
        complete=not token.is_cancelled,
        wall_time=time.monotonic() - started,
        stop_reason=token.reason,
    )
    if result.complete:
        logger.info(f"Optimum {result.optimum} at n={n} after {result.nodes_explored} nodes")
    else:
        logger.warning(
            f"Search stopped ({token.reason}) after {result.nodes_explored} nodes; "
            f"best found {result.optimum}"
        )
    return result
