"""
Unit tests for supporting graphs, the ratio step, the k=5/k=7 reductions and
the odd-k partition.

The reduction instances are small hand-built hypergraphs whose |J| values are
easy to count: in each, the supporting graph is the union of the t-subsets of
the edges and of the 2-configuration spans.
"""

from fractions import Fraction

import pytest

from hyperconf.exceptions.errors import (
    BadArgs,
    CaseAnalysisExhausted,
    HypothesisViolated,
    NotKFree,
    NotSupporting,
    PreconditionViolated,
)
from hyperconf.hypergraph import Configuration, Params, TGraph, build, t_shadow
from hyperconf.reduction import (
    Girth,
    classify_four_minus,
    density_condition,
    non_edge_girth,
    odd_g3_bound_report,
    odd_partition,
    packing_lower_bound,
    ratio_step_ok,
    reduce_k5,
    reduce_k7,
    supporting_J,
)
from hyperconf.search import is_free
from tests.fixtures.generators import random_hypergraph

pytestmark = pytest.mark.unit


@pytest.fixture
def three_minus_instance():
    """Three 6-sets pairwise meeting in 3 vertices (a 3-minus configuration at t=4) plus a far edge."""
    return build(
        6,
        15,
        [
            [0, 1, 2, 3, 4, 5],
            [0, 1, 2, 6, 7, 8],
            [3, 4, 5, 6, 7, 8],
            [9, 10, 11, 12, 13, 14],
        ],
    )


@pytest.fixture
def case_one_instance():
    """Four 5-sets on 10 vertices, every vertex in exactly two of them, no 2- or 3-configuration at t=3."""
    return build(5, 10, [[0, 1, 2, 3, 4], [0, 5, 6, 7, 8], [1, 2, 5, 6, 9], [3, 4, 7, 8, 9]])


@pytest.fixture
def case_two_instance():
    """A 4-minus configuration at (6, 4) containing exactly one 2-configuration (edges 0 and 1)."""
    return build(
        6,
        11,
        [[0, 1, 2, 3, 4, 5], [0, 1, 2, 3, 6, 7], [0, 4, 6, 8, 9, 10], [1, 5, 7, 8, 9, 10]],
    )


@pytest.fixture
def case_three_instance():
    """Two edge-disjoint 2-configurations at (5, 3) that together span 10 vertices."""
    return build(5, 10, [[0, 1, 2, 3, 4], [0, 1, 2, 5, 6], [3, 4, 7, 8, 9], [5, 6, 7, 8, 9]])


class TestSupportingGraph:
    """Tests for J(F), girth and the packing bound."""

    def test_supporting_j_example(self, path_pair):
        assert len(supporting_J(path_pair, Params(3, 2, 5))) == 6

    def test_small_k_uses_only_edges(self, path_pair):
        """With k < 4 no 2-configuration contributes."""
        assert supporting_J(path_pair, Params(3, 2, 3)) == t_shadow(path_pair, 2)

    def test_non_edge_girth(self, path_pair):
        """The pair {0, 3} is spanned by the 2-configuration but missing from the shadow."""
        assert non_edge_girth(path_pair, t_shadow(path_pair, 2), 5) == 2
        J = supporting_J(path_pair, Params(3, 2, 5))
        assert non_edge_girth(path_pair, J, 5) is Girth.EXCEEDS_CAP

    def test_girth_requires_supporting_graph(self, path_pair):
        with pytest.raises(NotSupporting):
            non_edge_girth(path_pair, TGraph(2, frozenset({(0, 1)})), 3)
        with pytest.raises(BadArgs):
            non_edge_girth(path_pair, t_shadow(path_pair, 2), 0)

    @pytest.mark.parametrize("seed", range(8))
    @pytest.mark.parametrize("k", [5, 7])
    def test_supporting_j_shrinks_with_the_graph(self, seed, k):
        params = Params(3, 2, k)
        F = random_hypergraph(3, 8, 10, seed)
        J = supporting_J(F, params)
        for drop in range(0, F.m, 3):
            assert supporting_J(F.without([drop]), params).members <= J.members
        assert supporting_J(F.subgraph([]), params).members == frozenset()

    def test_packing_bound_single_edge(self):
        F = build(3, 3, [[0, 1, 2]])
        assert packing_lower_bound(F, t_shadow(F, 2), Params(3, 2, 4)) == Fraction(1, 6)
        G = build(5, 5, [[0, 1, 2, 3, 4]])
        assert packing_lower_bound(G, t_shadow(G, 3), Params(5, 3, 4)) == Fraction(1, 60)

    def test_packing_bound_fano(self, fano):
        assert packing_lower_bound(fano, t_shadow(fano, 2), Params(3, 2, 3)) == Fraction(1, 6)

    def test_packing_bound_hypotheses(self, path_pair, k4_triples):
        with pytest.raises(HypothesisViolated) as exc_info:
            packing_lower_bound(path_pair, t_shadow(path_pair, 2), Params(3, 2, 4))
        assert exc_info.value.which == "non-edge girth > k/2"
        with pytest.raises(HypothesisViolated) as exc_info:
            packing_lower_bound(k4_triples, t_shadow(k4_triples, 2), Params(3, 2, 3))
        assert exc_info.value.which == "k-free"
        empty = build(3, 3, [])
        with pytest.raises(HypothesisViolated) as exc_info:
            packing_lower_bound(empty, t_shadow(empty, 2), Params(3, 2, 3))
        assert exc_info.value.which == "nonempty"


class TestRatioStep:
    """Tests for the ratio step and the density condition."""

    def test_example(self):
        assert ratio_step_ok(9, 3, 6, 2, 3)
        assert ratio_step_ok(5, 2, 0, 0, Fraction(5, 2))

    @pytest.mark.parametrize(
        "args,which",
        [
            ((10, 3, 6, 2, 3), "x1 <= alpha*y1"),
            ((9, 3, 10, 2, 3), "x2 <= x1"),
            ((9, 3, 6, 4, 3), "y2 <= y1"),
            ((9, 3, 8, 2, 3), "x1 - x2 >= alpha*(y1 - y2)"),
        ],
    )
    def test_hypothesis_order(self, args, which):
        with pytest.raises(HypothesisViolated) as exc_info:
            ratio_step_ok(*args)
        assert exc_info.value.which == which

    def test_negative_values(self):
        with pytest.raises(BadArgs):
            ratio_step_ok(-1, 3, 0, 0, 1)

    def test_density_condition(self, fano):
        cert = density_condition(fano, fano.without([0]), Params(3, 2, 3))
        assert (cert.lhs, cert.rhs) == (126, 126)
        assert cert.holds
        assert cert.details["via_ratio_step"]

    def test_density_condition_needs_subgraph(self, fano, path_pair):
        with pytest.raises(BadArgs):
            density_condition(path_pair, fano, Params(3, 2, 3))


class TestReduceK5:
    """Tests for the k=5 reduction."""

    def test_removes_three_minus(self, three_minus_instance):
        final, trace = reduce_k5(three_minus_instance, Params(6, 4, 5))
        assert final.is_subgraph_of(three_minus_instance)
        assert is_free(final, Params(6, 4, 5), 5)
        assert final.edges == ((9, 10, 11, 12, 13, 14),)
        assert [s.rule for s in trace.steps] == ["remove-3-minus"]
        step = trace.steps[0]
        assert (step.j_before, step.j_after) == (60, 15)
        assert step.delta_j == step.required == 45
        summary = trace.summary()
        assert summary.name == "telescoped-reduction"
        assert (summary.lhs, summary.rhs) == (45, 45)

    def test_nothing_to_remove(self, path_pair):
        final, trace = reduce_k5(path_pair, Params(3, 2, 5))
        assert final == path_pair
        assert trace.steps == []
        assert trace.summary().holds

    def test_precondition_witness(self):
        F = build(3, 4, [[0, 1, 2], [0, 1, 3], [0, 2, 3]])
        with pytest.raises(PreconditionViolated) as exc_info:
            reduce_k5(F, Params(3, 2, 5))
        assert exc_info.value.details["which"] == "2 and 3-minus configurations edge-disjoint"
        assert len(exc_info.value.witness) == 2

    def test_wrong_k(self, fano):
        with pytest.raises(BadArgs):
            reduce_k5(fano, Params(3, 2, 7))

    def test_trace_records(self, three_minus_instance):
        _, trace = reduce_k5(three_minus_instance, Params(6, 4, 5))
        record = trace.to_records()[0]
        assert record["inequality"] == "45 >= 45"
        assert record["holds"]
        assert len(record["removed"]) == 3


class TestClassifyFourMinus:
    """Tests for the 4-minus case dispatch."""

    def test_case_one(self, case_one_instance):
        S = Configuration.of(case_one_instance, range(4))
        case = classify_four_minus(case_one_instance, S, Params(5, 3, 7))
        assert case.case == 1
        assert case.removal == frozenset({0})
        assert case.multiplier == 1

    def test_case_two(self, case_two_instance):
        S = Configuration.of(case_two_instance, range(4))
        case = classify_four_minus(case_two_instance, S, Params(6, 4, 7))
        assert case.case == 2
        assert case.removal == frozenset({0, 1})
        assert case.multiplier == 2

    def test_case_three(self, case_three_instance):
        S = Configuration.of(case_three_instance, range(4))
        case = classify_four_minus(case_three_instance, S, Params(5, 3, 7))
        assert case.case == 3
        assert case.removal == frozenset({0, 1, 2, 3})
        assert case.multiplier == 4
        assert [p.sorted_indices for p in case.pairs] == [(0, 1), (2, 3)]

    def test_three_configuration_inside(self, k4_triples):
        S = Configuration.of(k4_triples, range(4))
        with pytest.raises(CaseAnalysisExhausted):
            classify_four_minus(k4_triples, S, Params(3, 2, 7))


class TestReduceK7:
    """Tests for the k=7 reduction."""

    def test_case_one_step(self, case_one_instance):
        final, trace = reduce_k7(case_one_instance, Params(5, 3, 7))
        assert final.m == 3
        assert [s.rule for s in trace.steps] == ["four-minus-case-1"]
        assert (trace.j_initial, trace.j_final) == (40, 30)

    def test_case_two_step(self, case_two_instance):
        final, trace = reduce_k7(case_two_instance, Params(6, 4, 7))
        assert final.is_subgraph_of(case_two_instance)
        assert is_free(final, Params(6, 4, 7), 7)
        assert final.edges == ((0, 4, 6, 8, 9, 10), (1, 5, 7, 8, 9, 10))
        step = trace.steps[0]
        assert step.rule == "four-minus-case-2"
        assert (step.j_before, step.j_after) == (100, 30)
        assert step.required == 30

    def test_case_three_step(self, case_three_instance):
        final, trace = reduce_k7(case_three_instance, Params(5, 3, 7))
        assert final.m == 0
        step = trace.steps[0]
        assert step.rule == "four-minus-case-3"
        assert step.delta_j == 66
        assert step.required == 40
        assert trace.summary().holds

    def test_excluded_parameters(self, fano):
        with pytest.raises(PreconditionViolated):
            reduce_k7(fano, Params(3, 2, 7))
        with pytest.raises(BadArgs):
            reduce_k7(fano, Params(3, 2, 5))

    def test_precondition_witness(self):
        """Two 5-sets meeting in 4 vertices at t=3 form a 2-minus configuration."""
        F = build(5, 6, [[0, 1, 2, 3, 4], [0, 1, 2, 3, 5]])
        with pytest.raises(PreconditionViolated) as exc_info:
            reduce_k7(F, Params(5, 3, 7))
        assert exc_info.value.details["which"] == "2-minus-free"


class TestOddPartition:
    """Tests for the odd-k partition and the G3 report."""

    def test_example(self):
        p = odd_partition(build(3, 7, [[0, 1, 2], [1, 2, 3], [4, 5, 6]]), Params(3, 2, 5))
        assert (len(p.G2), len(p.G1), len(p.G3)) == (5, 3, 0)
        assert p.F1 == frozenset({2})
        assert p.F2 == frozenset({0, 1})
        assert p.pairs_tight
        assert p.alpha == Fraction(5, 2)

    def test_loose_pair_is_reported_not_asserted(self):
        """Edges meeting in 3 > t vertices break the |G2| identity without raising."""
        p = odd_partition(build(4, 5, [[0, 1, 2, 3], [0, 1, 2, 4]]), Params(4, 2, 3))
        assert not p.pairs_tight
        assert len(p.G2) == 9

    def test_even_k(self, fano):
        with pytest.raises(BadArgs):
            odd_partition(fano, Params(3, 2, 4))

    def test_not_k_free(self, k4_triples):
        with pytest.raises(NotKFree):
            odd_partition(k4_triples, Params(3, 2, 3))

    def test_g3_report(self):
        F = build(
            7,
            17,
            [
                [0, 1, 2, 3, 4, 5, 6],
                [0, 1, 7, 8, 9, 10, 11],
                [0, 1, 12, 13, 14, 15, 16],
            ],
        )
        params = Params(7, 2, 5)
        p = odd_partition(F, params)
        assert len(p.F3) == 3
        assert len(p.G3) == 136
        [report] = odd_g3_bound_report(p, params)
        assert report.pair == (0, 1)
        assert report.third == 2
        assert (report.measured, report.bound) == (66, 64)
        assert report.bound_asserted
        assert report.alpha_target == Fraction(123, 2)
        assert report.alpha_holds
        assert not report.k_holds

    def test_no_large_components(self, fano):
        p = odd_partition(fano, Params(3, 2, 3))
        assert odd_g3_bound_report(p, Params(3, 2, 3)) == []
        assert len(p.G1) == 21

