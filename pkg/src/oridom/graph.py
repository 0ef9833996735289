"""Immutable simple graphs on bitset adjacency rows, parsing and structure queries.

Vertices are integers 0..n-1. Neighborhoods are Python ints used as bitsets,
which keeps every solver in the package allocation-free and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ParseError

MAX_VERTICES = 512

INFINITE_DIAMETER = math.inf


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


class Graph:
    """Simple undirected graph, immutable after construction.

    ``adj[v]`` is the neighbor bitset of ``v`` and ``edges`` is the
    canonical edge list: pairs (u, v) with u < v, sorted lexicographically.
    """

    __slots__ = ("n", "adj", "edges", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ParseError("vertex count must be nonnegative")
        if n > MAX_VERTICES:
            raise ParseError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
        adj = [0] * n
        canonical = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParseError(f"loop edge at vertex {u}")
            if u > v:
                u, v = v, u
            if adj[u] >> v & 1:
                raise ParseError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            canonical.append((u, v))
        canonical.sort()
        self.n = n
        self.adj = tuple(adj)
        self.edges = tuple(canonical)
        self._edge_index = {e: i for i, e in enumerate(canonical)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) if u != v else False

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the canonical edge list."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise ParseError(f"({u}, {v}) is not an edge") from None

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_tuple(self.adj[v])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    degrees: tuple[int, ...]
    regular_r: Optional[int]  # present iff all degrees equal


@dataclass(frozen=True)
class StructureReport:
    profile: DegreeProfile
    components: tuple[tuple[int, ...], ...]
    is_connected: bool
    is_bipartite: bool
    bipartition: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    odd_cycle: Optional[tuple[int, ...]]
    diameter: float  # INFINITE_DIAMETER when disconnected
    component_diameters: tuple[int, ...]


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented format: an ``n`` header then ``u v`` lines."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty edge-list input")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in edge list: {exc}") from None
    n = values[0]
    rest = values[1:]
    if len(rest) % 2 != 0:
        raise ParseError("odd number of endpoints after header")
    return Graph(n, list(zip(rest[0::2], rest[1::2])))


def parse_arc_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse the same line format but keep pair order (tail, head)."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty arc-list input")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in arc list: {exc}") from None
    if (len(values) - 1) % 2 != 0:
        raise ParseError("odd number of endpoints after header")
    return values[0], list(zip(values[1::2], values[2::2]))


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line (printable 6-bit encoding of the upper triangle)."""
    if isinstance(line, bytes):
        line = line.decode("ascii")
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError("graph6 character outside printable range 63..126")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[0] == 63:
        if data[1] == 63:
            raise ParseError("graph6 codes above 258047 vertices not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ParseError("malformed graph6 length header")
    if n > MAX_VERTICES:
        raise ParseError(f"graph6 order {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ParseError(
            f"graph6 body has {len(body)} groups, expected {expected} for n={n}"
        )
    bits = []
    for d in body:
        for shift in range(5, -1, -1):
            bits.append(d >> shift & 1)
    if any(bits[nbits:]):
        raise ParseError("graph6 trailing padding bits are nonzero")
    edges = []
    idx = 0
    for v in range(n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode in canonical graph6 form; round-trips through parse_graph6."""
    n = g.n
    if n <= 62:
        header = [n]
    else:
        header = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    bits = []
    for v in range(n):
        col = g.adj[v]
        for u in range(v):
            bits.append(col >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    groups = [
        (bits[i] << 5)
        | (bits[i + 1] << 4)
        | (bits[i + 2] << 3)
        | (bits[i + 3] << 2)
        | (bits[i + 4] << 1)
        | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + d) for d in header + groups)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    edges = []
    for v in range(g.n):
        others = full & ~g.adj[v] & ~(1 << v)
        for u in iter_bits(others):
            if u > v:
                edges.append((v, u))
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabeled 0..k-1 in sorted vertex order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ParseError(f"induced set contains out-of-range vertex for n={g.n}")
    relabel = {v: i for i, v in enumerate(vs)}
    keep = mask_of(vs)
    edges = []
    for v in vs:
        for u in iter_bits(g.adj[v] & keep):
            if u > v:
                edges.append((relabel[v], relabel[u]))
    return Graph(len(vs), edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise ParseError(f"disjoint union order {total} exceeds cap {MAX_VERTICES}")
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(total, edges)


def _bfs_dist(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def structure(g: Graph) -> StructureReport:
    """Degree profile plus connectivity, bipartiteness and exact diameter.

    The diameter of a disconnected graph is reported as the infinity
    sentinel; per-component diameters are always available.
    """
    degrees = tuple(g.degree(v) for v in range(g.n))
    if g.n:
        dmin, dmax = min(degrees), max(degrees)
    else:
        dmin = dmax = 0
    profile = DegreeProfile(
        min_degree=dmin,
        max_degree=dmax,
        degrees=degrees,
        regular_r=dmin if g.n and dmin == dmax else None,
    )

    color = [-1] * g.n
    parent = [-1] * g.n
    components = []
    odd_cycle: Optional[tuple[int, ...]] = None
    bipartite = True
    for root in range(g.n):
        if color[root] >= 0:
            continue
        comp = [root]
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in iter_bits(g.adj[v]):
                    if color[u] < 0:
                        color[u] = color[v] ^ 1
                        parent[u] = v
                        comp.append(u)
                        nxt.append(u)
                    elif color[u] == color[v] and bipartite:
                        bipartite = False
                        odd_cycle = _odd_cycle_from_conflict(parent, v, u)
            frontier = nxt
        components.append(tuple(sorted(comp)))

    connected = len(components) <= 1
    comp_diams = []
    for comp in components:
        ecc = 0
        for v in comp:
            dist = _bfs_dist(g, v)
            ecc = max(ecc, max(dist[u] for u in comp))
        comp_diams.append(ecc)
    if connected:
        diameter: float = comp_diams[0] if comp_diams else 0
    else:
        diameter = INFINITE_DIAMETER

    if bipartite:
        side0 = tuple(v for v in range(g.n) if color[v] == 0)
        side1 = tuple(v for v in range(g.n) if color[v] == 1)
        bipartition: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = (side0, side1)
    else:
        bipartition = None

    return StructureReport(
        profile=profile,
        components=tuple(components),
        is_connected=connected,
        is_bipartite=bipartite,
        bipartition=bipartition,
        odd_cycle=odd_cycle,
        diameter=diameter,
        component_diameters=tuple(comp_diams),
    )


def _odd_cycle_from_conflict(parent: list[int], v: int, u: int) -> tuple[int, ...]:
    """Close an odd cycle from BFS-tree paths of two same-color endpoints."""
    path_v, path_u = [v], [u]
    seen = {v: 0}
    x = v
    while parent[x] >= 0:
        x = parent[x]
        seen[x] = len(path_v)
        path_v.append(x)
    x = u
    while x not in seen:
        x = parent[x]
        path_u.append(x)
    meet = seen[x]
    return tuple(path_v[:meet + 1] + path_u[:-1][::-1])


# Small named families used throughout the test rigs and constructions.

def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for v in range(n) for u in range(v)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParseError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
