import math
from pathlib import Path

import pytest

from oridom.errors import ParseError
from oridom.extremal import (
    conjecture_report,
    enumerate_maximal_outerplanar,
    family_stats,
    load_graph6_file,
    regular_family,
)
from oridom.graph import cycle_graph, parse_graph6, structure, to_graph6
from oridom.search import upper_directed_domination

FIXTURES = str(Path(__file__).resolve().parent.parent / "fixtures")


def catalan(k):
    return math.comb(2 * k, k) // (k + 1)


class TestEnumerateMaximalOuterplanar:
    def test_triangle(self):
        graphs = list(enumerate_maximal_outerplanar(3))
        assert len(graphs) == 1
        assert graphs[0].m == 3

    def test_square_two_triangulations(self):
        graphs = list(enumerate_maximal_outerplanar(4))
        assert len(graphs) == 2
        chords = {g.edges for g in graphs}
        assert len(chords) == 2

    def test_catalan_counts(self):
        for n in range(3, 9):
            assert len(list(enumerate_maximal_outerplanar(n))) == catalan(n - 2)

    def test_shape_invariants(self):
        for n in range(3, 9):
            for g in enumerate_maximal_outerplanar(n):
                assert g.m == 2 * n - 3
                for i in range(n):
                    assert g.has_edge(i, (i + 1) % n)
                st = structure(g)
                assert st.is_connected

    def test_out_of_range(self):
        with pytest.raises(ParseError):
            list(enumerate_maximal_outerplanar(2))
        with pytest.raises(ParseError):
            list(enumerate_maximal_outerplanar(15))


class TestFamilyStats:
    def test_two_regular_order_six(self):
        graphs = regular_family(6, 2, FIXTURES)
        stats = family_stats(graphs, family="r-regular", n=6, r=2)
        assert stats.count == 2
        assert stats.min_gamma_d == 3  # the 6-cycle
        assert stats.max_gamma_d == 4  # two disjoint triangles
        assert stats.min_exact and stats.max_exact

    def test_one_regular(self):
        for n in (2, 4, 6, 8):
            graphs = regular_family(n, 1, FIXTURES)
            stats = family_stats(graphs, family="r-regular", n=n, r=1)
            assert stats.min_gamma_d == stats.max_gamma_d == n // 2

    def test_skip_logic_matches_direct_loop(self):
        graphs = list(enumerate_maximal_outerplanar(6))
        stats = family_stats(graphs, family="maximal-outerplanar", n=6)
        direct = [upper_directed_domination(g).value for g in graphs]
        assert stats.count == len(graphs) == 14
        assert stats.min_gamma_d == min(direct)
        assert stats.max_gamma_d == max(direct)
        assert 2 <= stats.min_gamma_d <= 3  # inside the one-third/one-half bracket

    def test_witnesses_resolve(self):
        graphs = regular_family(6, 2, FIXTURES)
        stats = family_stats(graphs, family="r-regular", n=6, r=2)
        argmax = parse_graph6(stats.argmax_graph6)
        assert upper_directed_domination(argmax).value == stats.max_gamma_d
        argmin = parse_graph6(stats.argmin_graph6)
        assert upper_directed_domination(argmin).value == stats.min_gamma_d

    def test_seed_max_is_kept_on_ties(self):
        graphs = list(enumerate_maximal_outerplanar(5))
        seeded = family_stats(
            graphs,
            family="maximal-outerplanar",
            n=5,
            want="max",
            seed_max=(3, "seeded"),
        )
        assert seeded.max_gamma_d == 3
        assert seeded.argmax_graph6 == "seeded"

    def test_budget_degrades_safely(self):
        graphs = [cycle_graph(9)]
        stats = family_stats(graphs, family="graph6-stream", budget=3)
        assert not (stats.min_exact and stats.max_exact)
        # min reported from the upper endpoint, max from the lower endpoint
        assert stats.min_gamma_d >= stats.max_gamma_d

    def test_missing_fixture(self):
        with pytest.raises(ParseError):
            regular_family(10, 3, FIXTURES)


class TestRegularFixtures:
    def test_counts(self):
        expected = {
            (2, 1): 1, (4, 1): 1, (6, 1): 1, (8, 1): 1,
            (3, 2): 1, (4, 2): 1, (5, 2): 1, (6, 2): 2, (7, 2): 2, (8, 2): 3,
            (4, 3): 1, (6, 3): 2, (8, 3): 6,
        }
        for (n, r), count in expected.items():
            assert len(regular_family(n, r, FIXTURES)) == count

    def test_connected_small_fixture(self):
        path = Path(FIXTURES) / "connected_n_le6.g6"
        graphs = load_graph6_file(path)
        assert len(graphs) == 143
        assert sum(1 for g in graphs if g.n == 6) == 112
        assert all(structure(g).is_connected for g in graphs)

    def test_bipartite_fixture(self):
        path = Path(FIXTURES) / "bipartite_m_le14.g6"
        graphs = load_graph6_file(path)
        assert len(graphs) >= 200
        assert all(g.m <= 14 for g in graphs)
        assert all(structure(g).is_bipartite for g in graphs)


class TestConjectureReport:
    def test_small_table(self):
        rows = conjecture_report(6, fixtures=FIXTURES)
        index = {(row.n, row.r): row for row in rows}
        assert index[(4, 3)].max_gamma_d == 2  # K_4 alone, equal to n/2
        assert index[(4, 3)].conjecture1_verdict == "consistent"
        assert index[(6, 2)].max_gamma_d == 4
        assert index[(6, 2)].min_gamma_d == 3
        for row in rows:
            if row.r >= 2:
                assert row.eqm_bracket_holds

    def test_one_regular_rows(self):
        rows = conjecture_report(6, fixtures=FIXTURES)
        for row in rows:
            if row.r == 1:
                assert row.min_gamma_d == row.max_gamma_d == row.n // 2

    def test_question1_ratio_at_least_one(self):
        rows = conjecture_report(8, fixtures=FIXTURES)
        for row in rows:
            assert row.question1_ratio >= 1
