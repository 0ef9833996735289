import math
import random

import networkx as nx
import pytest

from oridom.errors import ParseError
from oridom.graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    structure,
    to_graph6,
)


def random_graph(n, p, rng):
    return Graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


class TestParseEdgeList:
    def test_triangle(self):
        g = parse_edge_list("3\n0 1\n1 2\n0 2")
        assert g.n == 3 and g.m == 3
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_matching(self):
        g = parse_edge_list("4\n0 1\n2 3")
        assert g.n == 4 and g.m == 2

    def test_single_vertex(self):
        g = parse_edge_list("1")
        assert g.n == 1 and g.m == 0

    def test_whitespace_tolerant(self):
        g = parse_edge_list("  3\n\n 0   1 \n1 2\n")
        assert g.m == 2

    def test_rejects_out_of_range(self):
        with pytest.raises(ParseError):
            parse_edge_list("2\n0 2")

    def test_rejects_loop(self):
        with pytest.raises(ParseError):
            parse_edge_list("3\n1 1")

    def test_rejects_duplicate(self):
        with pytest.raises(ParseError):
            parse_edge_list("3\n0 1\n1 0")

    def test_rejects_odd_tokens(self):
        with pytest.raises(ParseError):
            parse_edge_list("3\n0 1\n2")


class TestGraph6:
    def test_k2(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges == ((0, 1),)

    def test_k3(self):
        g = parse_graph6("Bw")
        assert g.n == 3 and g.m == 3

    def test_empty_order(self):
        assert parse_graph6("?").n == 0

    def test_roundtrip_small_families(self):
        for g in [complete_graph(5), cycle_graph(7), petersen_graph(), empty_graph(4)]:
            assert parse_graph6(to_graph6(g)) == g

    def test_matches_networkx_encoding(self):
        rng = random.Random(42)
        for _ in range(50):
            g = random_graph(rng.randint(1, 12), rng.random(), rng)
            ours = to_graph6(g)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert ours == theirs
            assert parse_graph6(ours) == g

    def test_rejects_trailing_bits(self):
        # K_2 with a nonzero padding bit: '_' is 100000, flip a pad bit
        bad = "A" + chr(63 + 0b110000)
        with pytest.raises(ParseError):
            parse_graph6(bad)

    def test_rejects_bad_length(self):
        with pytest.raises(ParseError):
            parse_graph6("B")  # n=3 needs one body character

    def test_rejects_out_of_range_char(self):
        with pytest.raises(ParseError):
            parse_graph6("A" + chr(5))

    def test_large_order_header(self):
        g = empty_graph(100)
        assert parse_graph6(to_graph6(g)) == g


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete_graph(6)) == empty_graph(6)

    def test_pentagon_self_complementary(self):
        c = complement(cycle_graph(5))
        st = structure(c)
        assert st.profile.regular_r == 2 and st.is_connected

    def test_two_matchings_to_c4(self):
        g = parse_edge_list("4\n0 1\n2 3")
        c = complement(g)
        assert set(c.edges) == {(0, 2), (0, 3), (1, 2), (1, 3)}

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng.randint(0, 10), rng.random(), rng)
            assert complement(complement(g)) == g


class TestInducedSubgraph:
    def test_empty_set(self):
        assert induced_subgraph(complete_graph(4), []) == empty_graph(0)

    def test_triangle_in_k4(self):
        assert induced_subgraph(complete_graph(4), [0, 1, 2]) == complete_graph(3)

    def test_c5_partial(self):
        g = induced_subgraph(cycle_graph(5), [0, 1, 3])
        assert g.n == 3 and g.edges == ((0, 1),)

    def test_identity(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            assert induced_subgraph(g, range(g.n)) == g

    def test_out_of_range(self):
        with pytest.raises(ParseError):
            induced_subgraph(complete_graph(3), [0, 5])


class TestDisjointUnion:
    def test_two_triangles(self):
        g = disjoint_union([complete_graph(3), complete_graph(3)])
        assert g.n == 6 and g.m == 6

    def test_isolated_vertices(self):
        assert disjoint_union([empty_graph(1)] * 5) == empty_graph(5)

    def test_triangle_plus_vertex(self):
        g = disjoint_union([cycle_graph(3), empty_graph(1)])
        assert g.n == 4 and g.m == 3

    def test_size_additive(self):
        rng = random.Random(3)
        gs = [random_graph(rng.randint(1, 6), 0.5, rng) for _ in range(3)]
        u = disjoint_union(gs)
        assert u.m == sum(g.m for g in gs)
        assert u.n == sum(g.n for g in gs)


class TestStructure:
    def test_path4(self):
        st = structure(path_graph(4))
        assert st.profile.min_degree == 1
        assert st.profile.max_degree == 2
        assert st.is_bipartite
        assert st.diameter == 3

    def test_petersen(self):
        st = structure(petersen_graph())
        assert st.profile.regular_r == 3
        assert not st.is_bipartite
        assert st.diameter == 2
        assert st.odd_cycle is not None
        cyc = st.odd_cycle
        assert len(cyc) % 2 == 1
        g = petersen_graph()
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.has_edge(a, b)

    def test_disconnected_diameter_sentinel(self):
        st = structure(parse_edge_list("4\n0 1\n2 3"))
        assert len(st.components) == 2
        assert math.isinf(st.diameter)
        assert st.component_diameters == (1, 1)

    def test_bipartition_witness(self):
        g = complete_bipartite(3, 4)
        st = structure(g)
        assert st.is_bipartite
        left, right = st.bipartition
        for u, v in g.edges:
            assert (u in left) != (v in left)
        assert len(left) + len(right) == g.n

    def test_star(self):
        st = structure(star_graph(5))
        assert st.profile.max_degree == 5
        assert st.diameter == 2
        assert st.is_bipartite

    def test_diameter_matches_bfs_oracle(self):
        rng = random.Random(19)
        for _ in range(25):
            g = random_graph(rng.randint(2, 9), 0.4, rng)
            st = structure(g)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            if nx.is_connected(h):
                assert st.diameter == nx.diameter(h)
                assert st.is_connected
            else:
                assert math.isinf(st.diameter)
            assert st.is_bipartite == nx.is_bipartite(h)
