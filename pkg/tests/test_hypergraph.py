import math
import random
from itertools import combinations

import pytest

from oridom.errors import InfeasibleError, ParseError
from oridom.graph import mask_of
from oridom.hypergraph import (
    Hypergraph,
    is_r_transversal,
    parse_hypergraph,
    r_transversal_number,
    randomized_r_transversal,
    transversal_number,
)


def brute_tau(h: Hypergraph, r: int = 1):
    """Subset enumeration by increasing size; the independent oracle."""
    for size in range(h.n + 1):
        for combo in combinations(range(h.n), size):
            if is_r_transversal(h, mask_of(combo), r):
                return size
    return None


def fano_plane() -> Hypergraph:
    lines = [
        (0, 1, 2), (0, 3, 4), (0, 5, 6),
        (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
    ]
    return Hypergraph(7, lines)


def random_uniform(n, m, k, rng):
    edges = []
    verts = list(range(n))
    for _ in range(m):
        rng.shuffle(verts)
        edges.append(tuple(sorted(verts[:k])))
    return Hypergraph(n, edges)


class TestParse:
    def test_basic(self):
        h = parse_hypergraph("4 2\n0 1 2\n2 3\n")
        assert h.n == 4 and h.m == 2
        assert h.edge_sizes() == (3, 2)

    def test_uniformity_flag(self):
        assert parse_hypergraph("4 2\n0 1\n2 3").uniform_k() == 2
        assert parse_hypergraph("4 2\n0 1 2\n2 3").uniform_k() is None

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_hypergraph("4\n0 1")

    def test_wrong_edge_count(self):
        with pytest.raises(ParseError):
            parse_hypergraph("4 3\n0 1\n2 3")

    def test_out_of_range_vertex(self):
        with pytest.raises(ParseError):
            parse_hypergraph("3 1\n0 5")

    def test_empty_edge_rejected(self):
        with pytest.raises(ParseError):
            Hypergraph(3, [0])


class TestTransversal:
    def test_single_edge(self):
        h = Hypergraph(3, [(0, 1, 2)])
        res = transversal_number(h)
        assert res.size == 1

    def test_fano(self):
        h = fano_plane()
        # oracle first: no 2-subset hits all seven lines, some 3-subset does
        assert brute_tau(h) == 3
        res = transversal_number(h)
        assert res.size == 3
        assert is_r_transversal(h, res.mask, 1)

    def test_duplicate_edges_allowed(self):
        h = Hypergraph(3, [(0, 1), (0, 1), (1, 2)])
        assert transversal_number(h).size == 1

    def test_matches_oracle_random(self):
        rng = random.Random(77)
        for _ in range(60):
            h = random_uniform(rng.randint(2, 9), rng.randint(1, 10), 2, rng)
            assert transversal_number(h).size == brute_tau(h)
        for _ in range(40):
            h = random_uniform(rng.randint(3, 9), rng.randint(1, 8), 3, rng)
            assert transversal_number(h).size == brute_tau(h)


class TestRTransversal:
    def test_r_equals_k_needs_every_vertex(self):
        h = Hypergraph(6, [(0, 1, 2), (2, 3, 4)])
        res = r_transversal_number(h, 3)
        assert res.size == 5
        assert set(res.vertices) == {0, 1, 2, 3, 4}

    def test_single_edge_r2(self):
        h = Hypergraph(4, [(0, 1, 2)])
        assert r_transversal_number(h, 2).size == 2

    def test_fano_r2(self):
        h = fano_plane()
        oracle = brute_tau(h, 2)
        res = r_transversal_number(h, 2)
        assert res.size == oracle == 6
        assert is_r_transversal(h, res.mask, 2)

    def test_r1_matches_plain(self):
        rng = random.Random(5)
        for _ in range(25):
            h = random_uniform(rng.randint(2, 8), rng.randint(1, 8), 2, rng)
            assert r_transversal_number(h, 1).size == transversal_number(h).size

    def test_infeasible_small_edge(self):
        h = Hypergraph(4, [(0, 1), (2,)])
        with pytest.raises(InfeasibleError):
            r_transversal_number(h, 2)

    def test_matches_oracle_random(self):
        rng = random.Random(31)
        for _ in range(30):
            h = random_uniform(rng.randint(3, 8), rng.randint(1, 7), 3, rng)
            for r in (1, 2, 3):
                assert r_transversal_number(h, r).size == brute_tau(h, r)


class TestRandomizedRTransversal:
    def test_always_valid(self):
        rng = random.Random(9)
        for _ in range(20):
            k = rng.choice([2, 3, 4])
            h = random_uniform(rng.randint(k, 10), rng.randint(1, 12), k, rng)
            for seed in range(10):
                for r in range(1, k + 1):
                    res = randomized_r_transversal(h, r, seed)
                    assert is_r_transversal(h, res.mask, r)
                    assert res.seed == seed and res.mode == "randomized"

    def test_r_equals_k_gives_union(self):
        # every vertex lies on an edge, so the output is exactly the union
        h = Hypergraph(5, [(0, 1, 2), (2, 3, 4)])
        for seed in range(25):
            res = randomized_r_transversal(h, 3, seed)
            assert set(res.vertices) == {0, 1, 2, 3, 4}

    def test_single_edge_r1(self):
        h = Hypergraph(4, [(0, 1, 2, 3)])
        for seed in range(25):
            res = randomized_r_transversal(h, 1, seed)
            assert 1 <= res.size <= 4

    def test_deterministic_per_seed(self):
        h = random_uniform(12, 18, 3, random.Random(2))
        a = randomized_r_transversal(h, 2, 1234)
        b = randomized_r_transversal(h, 2, 1234)
        assert a == b

    def test_requires_uniform(self):
        h = Hypergraph(4, [(0, 1, 2), (2, 3)])
        with pytest.raises(ParseError):
            randomized_r_transversal(h, 1, 0)

    def test_mean_respects_expectation_bound(self):
        rng = random.Random(41)
        k, r = 4, 2
        h = random_uniform(20, 30, k, rng)
        sizes = [randomized_r_transversal(h, r, seed).size for seed in range(100)]
        bound = h.n * math.log(k) / k + r * h.m * (2 * math.log(k)) ** r / k
        mean = sum(sizes) / len(sizes)
        sd = (sum((s - mean) ** 2 for s in sizes) / (len(sizes) - 1)) ** 0.5
        assert mean <= bound + 3 * sd / math.sqrt(len(sizes))
