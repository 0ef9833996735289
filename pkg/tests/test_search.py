import math
import random

import pytest

from oridom.constructions import verify_certificate
from oridom.digraph import Orientation, gamma_directed
from oridom.errors import ParseError
from oridom.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    path_graph,
    petersen_graph,
    star_graph,
)
from oridom.invariants import domination_number, max_average_degree
from oridom.search import (
    enumerate_orientations,
    hakimi_orientation,
    lower_directed_domination,
    upper_directed_domination,
)


def random_graph(n, p, rng):
    return Graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def brute_gamma_d_upper(g):
    return max(gamma_directed(d).value for d in enumerate_orientations(g))


def brute_gamma_d_lower(g):
    return min(gamma_directed(d).value for d in enumerate_orientations(g))


class TestEnumerateOrientations:
    def test_counts(self):
        assert len(list(enumerate_orientations(complete_graph(2)))) == 2
        assert len(list(enumerate_orientations(complete_graph(3)))) == 8
        assert len(list(enumerate_orientations(path_graph(3), [(0, 1)]))) == 2

    def test_k3_cyclic_count(self):
        cyclic = [
            d
            for d in enumerate_orientations(complete_graph(3))
            if all(d.out_degree(v) == 1 for v in range(3))
        ]
        assert len(cyclic) == 2

    def test_lexicographic_bit_order(self):
        seen = [d.bits for d in enumerate_orientations(path_graph(3))]
        # edge 0 is the most significant position
        assert seen == [0b00, 0b10, 0b01, 0b11]

    def test_fixed_respected(self):
        g = path_graph(3)
        for d in enumerate_orientations(g, [(1, 0)]):
            assert d.in_masks[0] & 2

    def test_fixed_non_edge_rejected(self):
        with pytest.raises(ParseError):
            list(enumerate_orientations(path_graph(3), [(0, 2)]))

    def test_fixed_twice_rejected(self):
        with pytest.raises(ParseError):
            list(enumerate_orientations(path_graph(3), [(0, 1), (1, 0)]))


class TestUpperDirectedDomination:
    def test_paper_values(self):
        cases = [
            (cycle_graph(4), 2),
            (empty_graph(5), 5),
            (complete_graph(3), 2),
            (complete_graph(4), 2),
            (star_graph(4), 4),
        ]
        for g, expect in cases:
            res = upper_directed_domination(g)
            assert res.exact and res.value == expect

    def test_matches_brute_force(self):
        rng = random.Random(1)
        for _ in range(25):
            g = random_graph(rng.randint(1, 5), 0.6, rng)
            if g.m > 9:
                continue
            assert upper_directed_domination(g).value == brute_gamma_d_upper(g)

    def test_certificate_revalidates(self):
        rng = random.Random(2)
        for _ in range(15):
            g = random_graph(rng.randint(1, 7), 0.5, rng)
            res = upper_directed_domination(g)
            assert res.exact
            assert verify_certificate(res.certificate, exact=True)
            assert res.certificate.claimed_gamma == res.value

    def test_budget_interval_fallback(self):
        g = petersen_graph()
        res = upper_directed_domination(g, budget=5)
        assert not res.exact
        lo, hi = res.interval
        assert lo <= 4 <= hi  # the exact value stays inside the interval
        assert res.value == lo

    def test_workers_equivalence(self):
        rng = random.Random(3)
        for _ in range(10):
            g = random_graph(rng.randint(2, 7), 0.5, rng)
            base = upper_directed_domination(g, workers=1)
            for w in (2, 4):
                other = upper_directed_domination(g, workers=w)
                assert other.value == base.value
                assert other.exact == base.exact
                assert other.certificate.orientation.bits == base.certificate.orientation.bits

    def test_empty_graph(self):
        res = upper_directed_domination(empty_graph(0))
        assert res.value == 0 and res.exact


class TestLowerDirectedDomination:
    def test_gamma_equals_lower(self):
        for g in [cycle_graph(6), complete_graph(5), path_graph(4), star_graph(5)]:
            res = lower_directed_domination(g)
            assert res.value == domination_number(g).value
            assert verify_certificate(res.certificate, exact=True)

    def test_exhaustive_verification(self):
        rng = random.Random(4)
        for _ in range(20):
            g = random_graph(rng.randint(1, 7), 0.5, rng)
            if g.m > 12:
                continue
            res = lower_directed_domination(g, verify_exhaustively=True)
            assert res.verified_exhaustively
            assert res.value == brute_gamma_d_lower(g)

    def test_exhaustive_cap(self):
        with pytest.raises(ParseError):
            lower_directed_domination(complete_graph(7), verify_exhaustively=True)


class TestHakimiOrientation:
    def test_cycle(self):
        d = hakimi_orientation(cycle_graph(5))
        assert d.max_out_degree() <= 1

    def test_complete4(self):
        d = hakimi_orientation(complete_graph(4))
        assert d.max_out_degree() <= 2

    def test_tree_toward_root(self):
        d = hakimi_orientation(path_graph(9))
        assert d.max_out_degree() <= 1

    def test_random_meets_target(self):
        rng = random.Random(5)
        for _ in range(50):
            g = random_graph(rng.randint(1, 14), rng.random(), rng)
            d = hakimi_orientation(g)
            mad = max_average_degree(g).value
            target = math.ceil(mad / 2)
            assert d.max_out_degree() <= target
            assert d.base == g


class TestOrientationOrderProperties:
    def test_induced_monotone(self):
        rng = random.Random(6)
        for _ in range(20):
            g = random_graph(rng.randint(2, 6), 0.6, rng)
            if g.m > 9:
                continue
            sub_vertices = sorted(rng.sample(range(g.n), rng.randint(1, g.n)))
            h = induced_subgraph(g, sub_vertices)
            assert upper_directed_domination(g).value >= upper_directed_domination(h).value

    def test_spanning_monotone(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_graph(rng.randint(2, 5), 0.7, rng)
            if g.m == 0 or g.m > 9:
                continue
            keep = [e for e in g.edges if rng.random() < 0.7]
            h = Graph(g.n, keep)
            assert upper_directed_domination(g).value <= upper_directed_domination(h).value

    def test_disjoint_union_additive(self):
        rng = random.Random(8)
        for _ in range(10):
            a = random_graph(rng.randint(1, 4), 0.6, rng)
            b = random_graph(rng.randint(1, 4), 0.6, rng)
            u = disjoint_union([a, b])
            assert (
                upper_directed_domination(u).value
                == upper_directed_domination(a).value + upper_directed_domination(b).value
            )

    def test_cover_subadditive(self):
        rng = random.Random(9)
        for _ in range(15):
            g = random_graph(rng.randint(2, 6), 0.5, rng)
            if g.m > 10:
                continue
            parts = [set(), set()]
            for v in range(g.n):
                parts[rng.randint(0, 1)].add(v)
                if rng.random() < 0.3:
                    parts[rng.randint(0, 1)].add(v)
            parts = [sorted(p) for p in parts if p]
            union = set().union(*parts) if parts else set()
            for v in range(g.n):
                if v not in union:
                    parts.append([v])
            total = sum(
                upper_directed_domination(induced_subgraph(g, p)).value for p in parts
            )
            assert upper_directed_domination(g).value <= total
