#!/usr/bin/env python3
"""Regenerate the committed graph6 fixture files under fixtures/.

Produces:
  fixtures/connected_n_le6.g6   all connected graphs on 1..6 vertices, one
                                representative per isomorphism class
  fixtures/bipartite_m_le14.g6  all bipartite graphs on <= 7 vertices up to
                                isomorphism plus a seeded labeled sample on
                                8..12 vertices, every member with m <= 14
  fixtures/regular/r{r}_n{n}.g6 all r-regular graphs of order n up to
                                isomorphism, r <= 3, n <= 8

Run from the repository root: python scripts/generate_fixtures.py
"""

from __future__ import annotations

import sys
from itertools import combinations, permutations
from pathlib import Path

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from oridom.graph import Graph, structure, to_graph6  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
BIPARTITE_COUNTS = {1: 1, 2: 2, 3: 3, 4: 7, 5: 13, 6: 35, 7: 88}
REGULAR_COUNTS = {
    (2, 1): 1, (4, 1): 1, (6, 1): 1, (8, 1): 1,
    (3, 2): 1, (4, 2): 1, (5, 2): 1, (6, 2): 2, (7, 2): 2, (8, 2): 3,
    (4, 3): 1, (6, 3): 2, (8, 3): 6,
}


def edge_bits(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(n) for u in range(v)]


def canonical_classes(n: int) -> list[int]:
    """Canonical (min over permutations) edge-bitmask per isomorphism class."""
    pairs = edge_bits(n)
    e = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append(
            [index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        )
    keys = np.arange(1 << e, dtype=np.int64)
    bits = (keys[:, None] >> np.arange(e)) & 1
    pow2 = (1 << np.arange(e)).astype(np.int64)
    canon = keys.copy()
    for pm in perm_maps:
        np.minimum(canon, bits[:, pm] @ pow2, out=canon)
    return sorted(set(int(c) for c in canon))


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = edge_bits(n)
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def dedup_iso(graphs: list[Graph]) -> list[Graph]:
    """Representative per isomorphism class via invariant buckets plus VF2."""
    buckets: dict[tuple, list[Graph]] = {}
    for g in graphs:
        nxg = to_nx(g)
        tri = nx.triangles(nxg)
        key = (
            g.n,
            g.m,
            tuple(sorted(g.degree(v) for v in range(g.n))),
            tuple(sorted(tri.values())),
        )
        reps = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(to_nx(r), nxg) for r in reps):
            reps.append(g)
    out = []
    for key in sorted(buckets):
        out.extend(buckets[key])
    return out


def regular_labeled(n: int, r: int) -> list[Graph]:
    """Every labeled r-regular graph of order n by degree backtracking."""
    results: list[Graph] = []
    adj = [set() for _ in range(n)]
    deficits = [r] * n

    def rec() -> None:
        v = next((i for i in range(n) if deficits[i] > 0), None)
        if v is None:
            results.append(Graph(n, [(a, b) for a in range(n) for b in adj[a] if a < b]))
            return
        partners = [u for u in range(v + 1, n) if deficits[u] > 0 and u not in adj[v]]
        need = deficits[v]
        if len(partners) < need:
            return
        for combo in combinations(partners, need):
            for u in combo:
                adj[v].add(u)
                adj[u].add(v)
                deficits[u] -= 1
            deficits[v] = 0
            rec()
            deficits[v] = need
            for u in combo:
                adj[v].discard(u)
                adj[u].discard(v)
                deficits[u] += 1

    rec()
    return results


def bipartite_upto_iso_7() -> list[Graph]:
    """All bipartite graphs on exactly 7 vertices up to isomorphism."""
    candidates: list[Graph] = []
    n = 7
    for a in range(0, n // 2 + 1):
        b = n - a
        cross = [(i, a + j) for i in range(a) for j in range(b)]
        for mask in range(1 << len(cross)):
            edges = [cross[i] for i in range(len(cross)) if mask >> i & 1]
            candidates.append(Graph(n, edges))
    return dedup_iso(candidates)


def random_bipartite_batch() -> list[Graph]:
    rng = np.random.Generator(np.random.Philox(20240601))
    out = []
    for n in range(8, 13):
        a = n // 2
        b = n - a
        cross = [(i, a + j) for i in range(a) for j in range(b)]
        made = 0
        while made < 30:
            p = min(0.9, 12.0 / len(cross))
            edges = [e for e in cross if rng.random() < p]
            if len(edges) > 14:
                continue
            out.append(Graph(n, edges))
            made += 1
    return out


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    (FIXTURES / "regular").mkdir(exist_ok=True)

    pools: dict[int, list[Graph]] = {}
    for n in range(1, 7):
        pools[n] = [mask_to_graph(n, c) for c in canonical_classes(n)]
        print(f"n={n}: {len(pools[n])} classes")

    connected = []
    for n in range(1, 7):
        conn = [g for g in pools[n] if structure(g).is_connected]
        assert len(conn) == CONNECTED_COUNTS[n], (n, len(conn))
        connected.extend(conn)
    path = FIXTURES / "connected_n_le6.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in connected))
    print(f"wrote {path} ({len(connected)} graphs)")

    bipartite = []
    for n in range(1, 7):
        bip = [g for g in pools[n] if structure(g).is_bipartite]
        if len(bip) != BIPARTITE_COUNTS[n]:
            print(f"warning: bipartite count at n={n}: {len(bip)} != {BIPARTITE_COUNTS[n]}")
        bipartite.extend(bip)
    bip7 = bipartite_upto_iso_7()
    if len(bip7) != BIPARTITE_COUNTS[7]:
        print(f"warning: bipartite count at n=7: {len(bip7)} != {BIPARTITE_COUNTS[7]}")
    bipartite.extend(bip7)
    bipartite.extend(random_bipartite_batch())
    assert all(g.m <= 14 for g in bipartite)
    assert all(structure(g).is_bipartite for g in bipartite)
    assert len(bipartite) >= 200, len(bipartite)
    path = FIXTURES / "bipartite_m_le14.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in bipartite))
    print(f"wrote {path} ({len(bipartite)} graphs)")

    for (n, r), expected in sorted(REGULAR_COUNTS.items()):
        if n <= 6:
            fam = [
                g
                for g in pools[n]
                if all(g.degree(v) == r for v in range(g.n))
            ]
        else:
            fam = dedup_iso(regular_labeled(n, r))
        assert len(fam) == expected, (n, r, len(fam), expected)
        path = FIXTURES / "regular" / f"r{r}_n{n}.g6"
        path.write_text("".join(to_graph6(g) + "\n" for g in fam))
        print(f"wrote {path} ({len(fam)} graphs)")


if __name__ == "__main__":
    main()
