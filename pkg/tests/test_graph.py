import itertools

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from nodekayles import (
    Graph,
    GraphParseError,
    blowup,
    closed_neighborhood,
    complete,
    complete_multipartite,
    connected_components,
    empty,
    gnp,
    induced_subgraph,
    is_independent_set,
    parse_edge_list,
    parse_graph6,
    path,
    random_tree,
    spider,
    star,
    to_graph6,
)
from nodekayles.errors import ContractError, FamilySpecError
from nodekayles.generators import all_graphs, generate, parse_family
from nodekayles.io import format_edge_list, read_graphs, write_graph
from oracles import to_nx

P3 = path(3)


class TestEdgeList:
    def test_path(self):
        assert parse_edge_list("3\n0 1\n1 2") == P3

    def test_single_vertex(self):
        g = parse_edge_list("1\n")
        assert (g.n, g.m) == (1, 0)

    def test_duplicates_collapse(self):
        g = parse_edge_list("2\n0 1\n0 1")
        assert g == complete(2) and g.m == 1

    def test_comments_crlf_and_reversed_pairs(self):
        text = "# header\r\n3\r\n\r\n# middle\r\n2 1\r\n1 0\r\n"
        assert parse_edge_list(text) == P3

    @pytest.mark.parametrize("text, line", [
        ("3\n0 1\n1 x", 3),
        ("3\n0 1 2", 2),
        ("3\n0 3", 2),
        ("3\n1 1", 2),
        ("two\n", 1),
    ])
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(GraphParseError) as info:
            parse_edge_list(text)
        assert info.value.line == line
        assert f"line {line}" in str(info.value)

    def test_missing_header(self):
        with pytest.raises(GraphParseError):
            parse_edge_list("# nothing\n")

    def test_round_trip(self):
        g = gnp(9, 0.4, seed=3)
        assert parse_edge_list(format_edge_list(g)) == g


class TestGraph6:
    # Decoded by hand: bits run over the upper triangle column by column,
    # x(0,1), x(0,2), x(1,2), ..., six to a character offset by 63.
    def test_three_vertices_first_bit_is_pair_01(self):
        g = parse_graph6("B_")  # '_' = 95 - 63 = 0b100000
        assert g.n == 3 and g.edges() == [(0, 1)]

    def test_edge_12(self):
        g = parse_graph6("BG")  # 'G' = 71 - 63 = 0b001000, third bit is x(1,2)
        assert g.edges() == [(1, 2)]

    def test_single_vertex(self):
        assert parse_graph6("@") == Graph(1)

    def test_two_vertices(self):
        assert parse_graph6("A_") == complete(2)
        assert parse_graph6("A?") == empty(2)

    def test_known_encodings(self):
        assert parse_graph6("Bw") == complete(3)
        assert parse_graph6("Ch") == path(4)  # 'h' = 0b101001: x(0,1), x(1,2), x(2,3)

    @pytest.mark.parametrize("bad", ["", "B", "B__", "B\x7f", "B "])
    def test_errors(self, bad):
        with pytest.raises(GraphParseError):
            parse_graph6(bad)

    def test_agrees_with_networkx_on_all_small_graphs(self):
        for n in range(6):
            for g in all_graphs(n):
                code = to_graph6(g)
                assert code == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
                assert parse_graph6(code) == g

    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g

    def test_extended_size_header(self):
        g = path(70)
        code = to_graph6(g)
        assert code.startswith("~")
        assert parse_graph6(code) == g
        assert nx.from_graph6_bytes(code.encode()).number_of_edges() == 69

    def test_header_prefix_is_accepted(self):
        assert parse_graph6(">>graph6<<Bw") == complete(3)


def test_file_round_trip(tmp_path):
    g = spider(3)
    for name in ("g.g6", "g.txt"):
        write_graph(g, tmp_path / name)
        assert read_graphs(tmp_path / name) == [g]
    (tmp_path / "many.g6").write_text("Bw\nA_\n\n@\n")
    assert [h.n for h in read_graphs(tmp_path / "many.g6")] == [3, 2, 1]


class TestQueries:
    def test_induced_endpoints_of_path(self):
        h, mapping = induced_subgraph(P3, {0, 2})
        assert h == empty(2) and mapping == (0, 2)

    def test_induced_in_triangle(self):
        assert induced_subgraph(complete(3), {0, 1})[0] == complete(2)

    def test_induced_identity(self):
        g = gnp(8, 0.5, seed=1)
        h, mapping = induced_subgraph(g, range(8))
        assert h == g and mapping == tuple(range(8))

    def test_induced_out_of_range(self):
        with pytest.raises(ContractError):
            induced_subgraph(P3, {3})

    def test_closed_neighborhood(self):
        assert closed_neighborhood(P3, {1}) == {0, 1, 2}
        assert closed_neighborhood(P3, set()) == set()
        assert closed_neighborhood(star(3), {2}) == {0, 2}

    def test_components(self):
        assert connected_components(empty(2)) == [{0}, {1}]
        assert connected_components(P3) == [{0, 1, 2}]
        assert connected_components(Graph(0)) == []

    def test_independent(self):
        assert is_independent_set(P3, {0, 2})
        assert not is_independent_set(complete(2), {0, 1})
        assert is_independent_set(gnp(6, 0.9, seed=2), set())

    @given(graphs())
    def test_invariants(self, g):
        for v in g.vertices:
            assert v not in g.neighbors(v)
            assert all(v in g.neighbors(u) for u in g.neighbors(v))
            assert closed_neighborhood(g, {v}) == {v} | g.neighbors(v)
        comps = connected_components(g)
        assert sum(map(len, comps)) == g.n
        assert frozenset().union(*comps) == set(g.vertices)
        assert [min(c) for c in comps] == sorted(min(c) for c in comps)
        assert sorted(map(sorted, comps)) == sorted(sorted(c) for c in nx.connected_components(to_nx(g)))

    def test_bad_graphs_rejected(self):
        with pytest.raises(ContractError):
            Graph(2, [(0, 0)])
        with pytest.raises(ContractError):
            Graph(2, [(0, 2)])
        with pytest.raises(ContractError):
            Graph.from_masks([0b10, 0b00])


class TestGenerators:
    def test_spider_two(self):
        g = spider(2)
        assert g.n == 7
        # one edge from the root into each leg plus two inside it
        assert g.m == 6
        assert g.degree(0) == 2
        for i in range(2):
            a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
            assert (g.degree(a), g.degree(b), g.degree(c)) == (2, 2, 1)
            assert g.has_edge(0, a)

    def test_spider_sizes(self):
        for k in range(1, 8):
            g = spider(k)
            assert (g.n, g.m) == (3 * k + 1, 3 * k)

    def test_path4_is_spider1(self):
        assert path(4) == spider(1)

    def test_blowup_k23(self):
        g = blowup(complete(2), [2, 3], ["independent", "independent"])
        assert g == complete_multipartite([2, 3])
        assert g.m == 6 and not g.has_edge(0, 1) and not g.has_edge(2, 3)

    def test_blowup_clique_block(self):
        g = blowup(complete(2), [2, 3], ["clique", "independent"])
        assert g.has_edge(0, 1) and g.m == 7

    @given(graphs(max_n=7))
    def test_blowup_of_ones_is_identity(self, h):
        for kinds in (["clique"] * h.n, ["independent"] * h.n):
            assert blowup(h, [1] * h.n, kinds) == h

    def test_gnp_is_deterministic(self):
        assert gnp(12, 0.5, seed=7) == gnp(12, 0.5, seed=7)
        assert gnp(12, 0.5, seed=7) != gnp(12, 0.5, seed=8)
        assert gnp(5, 0.0, seed=1).m == 0 and gnp(5, 1.0, seed=1) == complete(5)

    def test_random_tree(self):
        for n in range(1, 20):
            t = random_tree(n, seed=n)
            assert t.m == n - 1 and nx.is_tree(to_nx(t))
        assert random_tree(15, 4) == random_tree(15, 4)

    @pytest.mark.parametrize("call", [
        lambda: gnp(4, 1.5, 0),
        lambda: spider(0),
        lambda: complete_multipartite([2, 0]),
        lambda: blowup(complete(2), [1], ["clique"]),
        lambda: blowup(complete(1), [1], ["loose"]),
        lambda: generate("nope", 3),
        lambda: parse_family("gnp:4:x:1"),
    ])
    def test_spec_errors(self, call):
        with pytest.raises(FamilySpecError):
            call()

    def test_parse_family(self):
        assert parse_family("spider:3") == spider(3)
        assert parse_family("gnp:12:0.5:7") == gnp(12, 0.5, 7)
        assert parse_family("complete_multipartite:3,3,3") == complete_multipartite([3, 3, 3])
        assert parse_family("random_tree:9:2") == random_tree(9, 2)
        assert generate("star", 4) == star(4)

    def test_all_graphs_counts(self):
        for n in range(5):
            assert sum(1 for _ in all_graphs(n)) == 2 ** (n * (n - 1) // 2)
        assert len({g for g in all_graphs(4)}) == 64

    def test_multipartite_matches_networkx(self):
        for sizes in itertools.product(range(1, 4), repeat=3):
            g = complete_multipartite(list(sizes))
            assert nx.is_isomorphic(to_nx(g), nx.complete_multipartite_graph(*sizes))
