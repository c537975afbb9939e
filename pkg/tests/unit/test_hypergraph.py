"""
Unit tests for canonical hypergraphs, t-graphs and the text format.
"""

import pytest

from hyperconf.exceptions.errors import (
    BadT,
    DuplicateEdge,
    HypergraphParseError,
    HypergraphTooLarge,
    IndexOutOfRange,
    InvalidParams,
    NonUniformEdge,
    VertexOutOfRange,
)
from hyperconf.hypergraph import (
    Configuration,
    Params,
    TGraph,
    build,
    config_bound,
    cover_profile,
    parse_hypergraph,
    read_hypergraph,
    serialize_hypergraph,
    span,
    t_shadow,
    t_tight_components,
    write_hypergraph,
)
from hyperconf.utils.config import configure
from tests.fixtures import oracles
from tests.fixtures.generators import random_hypergraph

pytestmark = pytest.mark.unit


class TestParams:
    """Tests for the (r, t, k) triple."""

    def test_span_ceiling(self):
        """s(ell) = ell(r-t)+t and the minus variant is one less."""
        params = Params(3, 2, 5)
        assert params.s(5) == 7
        assert config_bound(params, 5) == 7
        assert config_bound(params, 2, minus=True) == 3
        assert params.binom_rt == 3

    @pytest.mark.parametrize("r,t,k", [(2, 2, 2), (3, 0, 2), (3, 2, 1)])
    def test_invalid(self, r, t, k):
        """t must lie in [1, r-1] and k must be at least 2."""
        with pytest.raises(InvalidParams):
            Params(r, t, k)

    def test_with_k(self):
        assert Params(4, 2, 3).with_k(7) == Params(4, 2, 7)


class TestBuild:
    """Tests for build and the canonical form."""

    def test_canonical_order(self):
        """Edges are sorted inside and lexicographically across."""
        F = build(3, 4, [{1, 2, 3}, {2, 3, 0}])
        assert F.edges == ((0, 2, 3), (1, 2, 3))
        assert F.m == 2
        assert F.edge_index([3, 2, 1]) == 1
        assert F.edge_index([0, 1, 2]) is None

    def test_non_uniform_edge(self):
        with pytest.raises(NonUniformEdge):
            build(3, 4, [[0, 1]])

    def test_repeated_vertex(self):
        """A repeated vertex leaves fewer than r distinct vertices."""
        with pytest.raises(NonUniformEdge):
            build(3, 4, [[0, 0, 1]])

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRange) as exc_info:
            build(3, 4, [[1, 2, 4]])
        assert exc_info.value.details["vertices"] == [4]

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            build(3, 4, [[0, 1, 2], [2, 1, 0]])

    def test_vertex_cap(self):
        """n above the configured cap is rejected."""
        configure({"hypergraph": {"max_vertices": 10}})
        with pytest.raises(HypergraphTooLarge):
            build(3, 11, [])

    def test_sub_and_super_graphs(self, path_pair):
        assert path_pair.without([0]).edges == ((1, 2, 3),)
        assert path_pair.subgraph([1]).edges == ((1, 2, 3),)
        bigger = path_pair.with_edge([0, 1, 3])
        assert bigger.edges == ((0, 1, 2), (0, 1, 3), (1, 2, 3))
        assert path_pair.is_subgraph_of(bigger)
        with pytest.raises(DuplicateEdge):
            path_pair.with_edge([2, 3, 1])

    def test_index_out_of_range(self, path_pair):
        with pytest.raises(IndexOutOfRange):
            path_pair.subgraph([2])


class TestSpanAndShadow:
    """Tests for span, t-shadows and cover profiles."""

    def test_span(self, path_pair):
        assert span(path_pair, {0, 1}) == 4
        assert span(path_pair, {0}) == 3
        assert span(path_pair, set()) == 0

    def test_configuration_of(self, path_pair):
        config = Configuration.of(path_pair, [1, 0])
        assert config.span == 4
        assert config.sorted_indices == (0, 1)
        assert config.vertices == (0, 1, 2, 3)
        assert config.is_config(Params(3, 2, 2))
        assert not config.is_minus_config(Params(3, 2, 2))

    def test_shadow_of_path_pair(self, path_pair):
        """The shared pair {1, 2} is counted once."""
        shadow = t_shadow(path_pair, 2)
        assert len(shadow) == 5
        assert (1, 2) in shadow
        assert (0, 3) not in shadow

    def test_fano_covers_every_pair_once(self, fano):
        profile = cover_profile(fano, 2, include_zero=True)
        assert profile.j(1) == 21
        assert profile.j(0) == 0
        assert profile.j_at_least(2) == 0
        assert len(t_shadow(fano, 2)) == 21

    def test_profile_example(self):
        profile = cover_profile(build(3, 4, [[0, 1, 2], [0, 1, 3]]), 2, include_zero=True)
        assert (profile.j(2), profile.j(1), profile.j(0)) == (1, 4, 1)
        assert profile.zero_materialized
        assert profile.counts[(2, 3)] == 0

    def test_zero_count_without_enumeration(self):
        """Above the enumeration limits J_0 is still counted, just not materialized."""
        configure({"zero_enumeration": {"max_n": 3}})
        profile = cover_profile(build(3, 4, [[0, 1, 2]]), 2, include_zero=True)
        assert not profile.zero_materialized
        assert profile.j(0) == 3
        assert (0, 3) not in profile.counts

    @pytest.mark.parametrize("seed", range(20))
    def test_profile_matches_naive_count(self, seed):
        """Sum of i * J_i is |F| C(r,t) and the histogram matches a plain count."""
        F = random_hypergraph(4, 9, 12, seed)
        profile = cover_profile(F, 2, include_zero=True)
        assert profile.total_incidences() == F.m * 6
        assert dict(profile.histogram) == oracles.histogram(F.edges, 9, 2)

    def test_bad_t(self, path_pair):
        with pytest.raises(BadT):
            t_shadow(path_pair, 4)
        with pytest.raises(BadT):
            cover_profile(path_pair, 0)

    def test_tgraph_rejects_unsorted_members(self):
        with pytest.raises(BadT):
            TGraph(2, frozenset({(2, 1)}))

    def test_tgraph_set_operations(self):
        a = TGraph(2, frozenset({(0, 1), (1, 2)}))
        b = TGraph(2, frozenset({(1, 2)}))
        assert a.issuperset(b)
        assert list(a.difference(b)) == [(0, 1)]
        assert len(a.union(b)) == 2


class TestTightComponents:
    """Tests for t-tight components."""

    def test_example(self):
        F = build(3, 7, [[0, 1, 2], [1, 2, 3], [4, 5, 6]])
        assert t_tight_components(F, 2) == (frozenset({0, 1}), frozenset({2}))

    def test_single_shared_vertex_is_not_tight(self, fano):
        """Fano lines meet in one point, so every line is its own 2-tight component."""
        assert len(t_tight_components(fano, 2)) == 7
        assert len(t_tight_components(fano, 1)) == 1

    def test_chain(self):
        F = build(3, 6, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]])
        assert t_tight_components(F, 2) == (frozenset({0, 1, 2, 3}),)


class TestTextFormat:
    """Tests for parsing and serializing the hypergraph text format."""

    def test_parse(self):
        F = parse_hypergraph("3 4 2\n0 1 2\n1 2 3\n")
        assert F.edges == ((0, 1, 2), (1, 2, 3))
        assert (F.r, F.n) == (3, 4)

    def test_comments_and_crlf(self):
        F = parse_hypergraph("# two triples\r\n3 4 2\r\n# first\r\n1 2 3\r\n0 1 2\r\n")
        assert F.edges == ((0, 1, 2), (1, 2, 3))

    def test_serialize_is_canonical(self):
        F = parse_hypergraph("3 5 2\n1 2 4\n0 1 2\n")
        assert serialize_hypergraph(F) == "3 5 2\n0 1 2\n1 2 4\n"
        assert parse_hypergraph(serialize_hypergraph(F)) == F

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "3 4\n0 1 2\n",
            "3 4 2\n0 1 2\n",
            "3 4 1\n0  1 2\n",
            "3 4 1\n2 1 0\n",
            "3 4 1\n0 1 x\n",
            "3 4 1\n0 1\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(HypergraphParseError):
            parse_hypergraph(text)

    def test_line_number_in_error(self):
        with pytest.raises(HypergraphParseError) as exc_info:
            parse_hypergraph("3 4 2\n0 1 2\n1 3 2\n")
        assert exc_info.value.details["line"] == 3

    def test_build_errors_pass_through(self):
        with pytest.raises(DuplicateEdge):
            parse_hypergraph("3 4 2\n0 1 2\n0 1 2\n")
        with pytest.raises(VertexOutOfRange):
            parse_hypergraph("3 4 1\n1 2 5\n")

    def test_file_round_trip(self, tmp_path, fano):
        path = write_hypergraph(fano, tmp_path / "out" / "fano.txt")
        assert read_hypergraph(path) == fano

    def test_missing_file(self, tmp_path):
        with pytest.raises(HypergraphParseError):
            read_hypergraph(tmp_path / "absent.txt")

    @pytest.mark.parametrize("token", ["+1", "1_0", "١", "-1"])
    def test_only_plain_decimal_ids(self, token):
        with pytest.raises(HypergraphParseError) as exc_info:
            parse_hypergraph(f"3 12 1\n0 {token} 11\n")
        assert exc_info.value.details["line"] == 2

    def test_invalid_utf8_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_bytes(b"3 4 1\n0 1 \xff\n")
        with pytest.raises(HypergraphParseError) as exc_info:
            read_hypergraph(path)
        assert exc_info.value.details["offset"] == 10
