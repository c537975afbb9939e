"""
End-to-end acceptance checks.

These run the exact identities and per-step inequalities on many seeded
instances, compare the solver with the plain oracle, and sweep the full
arithmetic grids. They are slow; deselect with ``-m "not slow"``.
"""

from math import comb

import pytest

from hyperconf.bounds import (
    j0_j2_inequality,
    known_value_table,
    pi_known,
    sweep_claims,
    sweep_ratio_steps,
)
from hyperconf.cleaning import clean, verify_cleaned
from hyperconf.hypergraph import Params, cover_profile, t_shadow
from hyperconf.models import PackConstraints, SolverOptions
from hyperconf.reduction import reduce_k5, reduce_k7
from hyperconf.search import (
    find_witness,
    is_free,
    two_configs_through_edge,
    two_configs_through_tset,
)
from hyperconf.solver import exact_f, greedy_pack, verify_witness
from hyperconf.utils import format_fraction
from tests.fixtures import oracles
from tests.fixtures.generators import (
    FOUR_MINUS_GADGET,
    THREE_MINUS_GADGET,
    planted_k_free,
    random_hypergraph,
    random_k_free,
)

pytestmark = [pytest.mark.integration, pytest.mark.slow]

INSTANCES = 200
REDUCTION_INSTANCES = 100
CORRIDOR = (0.10, 0.20)
CORRIDOR_NODE_LIMIT = 2_000_000


class TestOracleEquivalence:
    """exact_f against the include/exclude oracle."""

    @pytest.mark.parametrize("n", range(3, 9))
    def test_linear_triple_systems(self, n):
        expected = oracles.max_k_free(3, 2, 2, n)
        result = exact_f(Params(3, 2, 2), n)
        assert result.complete
        assert result.optimum == expected

    def test_oracle_pins_small_values(self):
        assert oracles.max_k_free(3, 2, 2, 6) == 4
        assert oracles.max_k_free(3, 2, 2, 7) == 7

    @pytest.mark.parametrize("n", range(3, 8))
    def test_k3(self, n):
        result = exact_f(Params(3, 2, 3), n)
        assert result.complete
        assert result.optimum == oracles.max_k_free(3, 2, 3, n)


class TestCountingIdentity:
    """Sum of i*|J_i| equals |F|*C(r, t)."""

    @pytest.mark.parametrize("r,t", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3)])
    def test_incidences(self, r, t):
        for seed in range(200):
            F = random_hypergraph(r, 12, 1 + seed % 30, seed)
            profile = cover_profile(F, t, include_zero=True)
            assert profile.total_incidences() == F.m * comb(r, t)
            assert sum(profile.histogram.values()) == comb(F.n, t)
            nonzero = {i: c for i, c in profile.histogram.items() if c}
            assert nonzero == oracles.histogram(F.edges, F.n, t)


class TestClaimProperties:
    """Configuration counts through edges and t-sets, and the uncovered t-set inequality."""

    @pytest.mark.parametrize("params", [Params(3, 2, 3), Params(3, 2, 4), Params(4, 2, 4)])
    def test_two_configurations_through_an_edge(self, params):
        for seed in range(INSTANCES):
            F = random_k_free(params, 9, seed, max_edges=12)
            for e in range(F.m):
                assert len(two_configs_through_edge(F, params, e)) <= params.k - 2

    @pytest.mark.parametrize("params", [Params(3, 2, 4), Params(4, 2, 4), Params(4, 3, 6)])
    def test_two_configurations_through_a_tset(self, params):
        bound = (params.k - 2) ** 2
        for seed in range(INSTANCES):
            F = random_k_free(params, 9, seed, max_edges=12)
            for T in sorted(t_shadow(F, params.t).members):
                assert len(two_configs_through_tset(F, params, T)) <= bound

    def test_uncovered_tsets_above_threshold(self):
        """r = 14 is the smallest uniformity meeting the k=4 span threshold at t=2."""
        params = Params(14, 2, 4)
        constraints = PackConstraints(
            minus_free=frozenset({2}),
            no_three_minus_with_two=True,
            candidate_limit=1,
            max_attempts=40,
        )
        for seed in range(INSTANCES):
            F = greedy_pack(params, 40, seed=seed, constraints=constraints)
            cert = j0_j2_inequality(F, params)
            assert cert.holds
            assert cert.details["factor"] == 143


class TestCleaningContract:
    """Cleaned output passes every property and every stage respects its ceiling."""

    @pytest.mark.parametrize(
        "params,n",
        [
            (Params(3, 2, 3), 9),
            (Params(3, 2, 5), 9),
            (Params(3, 2, 7), 10),
            (Params(4, 2, 3), 12),
            (Params(4, 2, 5), 12),
            (Params(4, 2, 7), 40),
        ],
    )
    def test_contract(self, params, n):
        for seed in range(INSTANCES // 4):
            F = random_k_free(params, n, seed, max_edges=14)
            G, ledger = clean(F, params)
            assert verify_cleaned(G, params).is_clean
            for stage in ledger.stages:
                assert stage.edges_removed <= stage.bound
            assert F.m - G.m == ledger.total_removed
            assert ledger.total_removed <= ledger.bound_total


class TestReductionInequalities:
    """Every step lowers |J| by its required multiple of C(r, t) on cleaned input."""

    def test_k5(self):
        params = Params(6, 4, 5)
        stepped = 0
        for seed in range(REDUCTION_INSTANCES):
            F, _ = clean(planted_k_free(params, THREE_MINUS_GADGET, 2, 24, seed, extra=3), params)
            final, trace = reduce_k5(F, params)
            stepped += bool(trace.steps)
            for step in trace.steps:
                assert step.to_record()["holds"]
                assert step.required == 3 * params.binom_rt
            assert trace.summary().holds
            assert final.is_subgraph_of(F)
            assert is_free(final, params, params.k)
            assert find_witness(final, params, 3, minus=True) is None
        assert stepped >= REDUCTION_INSTANCES // 2

    def test_k7(self):
        params = Params(5, 3, 7)
        multipliers = {"remove-3-in-4": {3}, "remove-5-minus": {5}}
        stepped = 0
        for seed in range(REDUCTION_INSTANCES):
            F, _ = clean(planted_k_free(params, FOUR_MINUS_GADGET, 2, 24, seed, extra=3), params)
            final, trace = reduce_k7(F, params)
            stepped += bool(trace.steps)
            for step in trace.steps:
                assert step.to_record()["holds"]
                assert step.multiplier in multipliers.get(step.rule, {1, 2, 4})
            assert trace.summary().holds
            assert final.is_subgraph_of(F)
            assert is_free(final, params, params.k)
            for ell in (2, 3, 4, 5, 6):
                assert find_witness(final, params, ell, minus=True) is None
        assert stepped >= REDUCTION_INSTANCES // 2

    def test_unplanted_t2_inputs_pass_through(self):
        """Random cleaned inputs at t=2 still reduce to k-free subgraphs."""
        params = Params(3, 2, 5)
        for seed in range(REDUCTION_INSTANCES // 4):
            F, _ = clean(random_k_free(params, 9, seed, max_edges=12), params)
            final, trace = reduce_k5(F, params)
            assert final.is_subgraph_of(F)
            assert is_free(final, params, params.k)
            assert trace.summary().holds

class TestArithmeticClaims:
    """The binomial inequalities and the ratio step over their full grids."""

    def test_full_grid(self):
        report = sweep_claims(r_max=40, t_max=6, k_max=12, workers=2)
        assert report.ok, report.counterexamples[:5]
        assert sum(report.checked.values()) > 0

    def test_ratio_step(self):
        report = sweep_ratio_steps(samples=100_000, seed=0)
        assert report.ok
        assert report.checked == {"ratio-step": 100_000}


class TestKnownValues:
    """Pinned values as reduced fractions."""

    @pytest.mark.parametrize(
        "r,t,k,text",
        [
            (3, 2, 2, "1/6"),
            (3, 2, 3, "1/5"),
            (3, 2, 4, "7/36"),
            (5, 1, 3, "2/9"),
            (5, 2, 2, "1/20"),
            (5, 2, 3, "1/19"),
            (5, 2, 4, "1/20"),
        ],
    )
    def test_byte_exact(self, r, t, k, text):
        assert format_fraction(pi_known(r, t, k).value) == text

    def test_table_rows_match_lookup(self):
        for row in known_value_table():
            known = pi_known(row.r, row.t, row.k)
            if known is not None:
                assert row.value == known.value
                assert row.to_text().split()[3] == format_fraction(known.value)


class TestTrendCorridor:
    """f(n)/n^2 for (3,2,2) near the limit 1/6; asserted only for complete runs."""

    @pytest.mark.parametrize("n", range(12, 16))
    def test_corridor(self, n):
        params = Params(3, 2, 2)
        result = exact_f(
            params, n, SolverOptions(node_limit=CORRIDOR_NODE_LIMIT, symmetry_pruning=True)
        )
        assert verify_witness(result.witness, params)
        ratio = result.optimum / n**2
        assert ratio <= CORRIDOR[1]
        if result.complete:
            assert CORRIDOR[0] <= ratio
        else:
            assert result.stop_reason is not None
