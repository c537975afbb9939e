"""
Counting inequalities evaluated on concrete hypergraphs.

These check the finite double-counting steps of the even-k upper bound on a
given instance, in exact integers, after verifying each hypothesis.
"""

from math import comb

from hyperconf.bounds.calculator import r_threshold
from hyperconf.cleaning.cleaner import cleaning_constant
from hyperconf.exceptions.errors import BadArgs, ClaimViolation, HypothesisViolated
from hyperconf.hypergraph.core import Hypergraph, Params, check_uniformity, cover_profile
from hyperconf.models.certificate import Certificate
from hyperconf.models.search import ConfigQuery
from hyperconf.search.cancellation import create_search_token
from hyperconf.search.configurations import contains_two_configuration
from hyperconf.search.engine import find_witness, iter_configurations
from hyperconf.utils.logger import get_logger

logger = get_logger(__name__)


def _has_three_minus_with_two(F: Hypergraph, params: Params) -> bool:
    if F.m < 3:
        return False
    q = ConfigQuery.for_params(params, 3, minus=True)
    return any(
        contains_two_configuration(c, F, params)
        for c in iter_configurations(F, q, token=create_search_token())
    )


def j0_j2_inequality(F: Hypergraph, params: Params) -> Certificate:
    """
    Certificate for (k-2)^2 |J_0| >= {C(2r-t,t) - [2C(r,t)-1] - (k-3)} |J_{>=2}|.

    Hypotheses (verified on F): k even, F k-free and 2-minus-free, and no
    3-minus configuration contains a 2-configuration. J_0 counts the t-subsets
    of the n vertices covered by no edge.

    Raises:
        HypothesisViolated: A hypothesis fails on F
        ClaimViolation: The inequality fails although the hypotheses hold
    """
    check_uniformity(F, params)
    r, t, k = params.r, params.t, params.k
    if k % 2:
        raise HypothesisViolated("k even", details={"k": k})
    if find_witness(F, params, k) is not None:
        raise HypothesisViolated("k-free")
    if find_witness(F, params, 2, minus=True) is not None:
        raise HypothesisViolated("2-minus-free")
    if _has_three_minus_with_two(F, params):
        raise HypothesisViolated("no 3-minus configuration containing a 2-configuration")

    profile = cover_profile(F, t, include_zero=True)
    j0, j2 = profile.j(0), profile.j_at_least(2)
    factor = comb(2 * r - t, t) - (2 * params.binom_rt - 1) - (k - 3)
    cert = Certificate(
        "uncovered-vs-multiply-covered",
        lhs=(k - 2) ** 2 * j0,
        rhs=factor * j2,
        details={"J0": j0, "J>=2": j2, "factor": factor},
    )
    if not cert.holds:
        raise ClaimViolation("Uncovered t-set inequality failed", details=cert.to_record())
    return cert


def even_counting_chain(F: Hypergraph, params: Params) -> Certificate:
    """
    The chain |F| C(r,t) = sum_i i|J_i| <= |J_1| + (k-1)|J_{>=2}| = C(n,t) + (k-2)|J_{>=2}| - |J_0|.

    The certificate compares the right end (lhs) with |F| C(r,t) (rhs).
    ``details["within_binom"]`` records |F| C(r,t) <= C(n,t), which must hold
    whenever |J_0| >= (k-2)|J_{>=2}|.

    Raises:
        HypothesisViolated: Some t-set is covered k or more times
        ClaimViolation: A link of the chain fails
    """
    check_uniformity(F, params)
    k = params.k
    profile = cover_profile(F, params.t, include_zero=True)
    if profile.j_at_least(k):
        raise HypothesisViolated("J_{>=k} empty", details={"J>=k": profile.j_at_least(k)})

    incidences = F.m * params.binom_rt
    if profile.total_incidences() != incidences:
        raise ClaimViolation(
            "Double count of (edge, t-set) incidences disagrees",
            details={"incidences": incidences, "sum": profile.total_incidences()},
        )
    j0, j1, j2 = profile.j(0), profile.j(1), profile.j_at_least(2)
    total = comb(F.n, params.t)
    middle = j1 + (k - 1) * j2
    right = total + (k - 2) * j2 - j0
    if middle != right:
        raise ClaimViolation("Chain identity failed", details={"middle": middle, "right": right})

    condition = j0 >= (k - 2) * j2
    within = incidences <= total
    logger.debug(f"Counting chain: J0={j0}, J1={j1}, J>=2={j2}, incidences={incidences}, C(n,t)={total}")
    if condition and not within:
        raise ClaimViolation(
            "Incidences exceed C(n,t) although |J_0| >= (k-2)|J_{>=2}|",
            details={"incidences": incidences, "binom": total},
        )
    return Certificate(
        "even-counting-chain",
        lhs=right,
        rhs=incidences,
        details={
            "J0": j0,
            "J1": j1,
            "J>=2": j2,
            "binom": total,
            "uncovered_condition": condition,
            "within_binom": within,
        },
    )


def edge_upper_bound(n: int, params: Params) -> int:
    """
    An upper bound on f(n) for (r, t, k).

    Always floor((k-1) C(n,t) / C(r,t)); for even k with r above the
    threshold also C(n,t)/C(r,t) + C_k C(n,t-1), with C_k the cleaning
    constant. Returns the smaller one.
    """
    if n < params.r:
        raise BadArgs(f"Need n >= r, got n={n}", details={"n": n, "r": params.r})
    t, k = params.t, params.k
    bound = (k - 1) * comb(n, t) // params.binom_rt
    if k % 2 == 0 and t >= 2 and params.r >= r_threshold(k, t):
        cleaned = comb(n, t) // params.binom_rt + cleaning_constant(params) * comb(n, t - 1)
        bound = min(bound, cleaned)
    return bound
