"""Exact classical graph invariants with re-validatable witnesses.

Every solver is a pure function of an immutable Graph, branches with
deterministic lowest-index tie-breaking, and returns an InvariantValue whose
witness can be checked against the claimed value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InternalInvariantViolation, ParseError
from .graph import Graph, bits_tuple, complement, iter_bits
from .hypergraph import min_hitting_set

Witness = Union[tuple, dict, None]


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: Union[int, Fraction]
    witness: Witness


# ---------------------------------------------------------------------------
# Independence, clique, vertex cover


def _greedy_clique_cover(g: Graph, candidates: int) -> int:
    """Number of cliques in a greedy clique partition of g[candidates].

    Upper-bounds the independence number of the induced subgraph, which makes
    it an admissible pruning bound for the branch-and-bound below.
    """
    cliques: list[int] = []
    for v in iter_bits(candidates):
        placed = False
        for i, c in enumerate(cliques):
            if c & ~g.adj[v] == 0:  # v adjacent to every member
                cliques[i] = c | 1 << v
                placed = True
                break
        if not placed:
            cliques.append(1 << v)
    return len(cliques)


def independence_number(g: Graph) -> InvariantValue:
    """Maximum independent set via bitset branch-and-bound."""
    best_mask = 0
    best_size = 0

    def dfs(candidates: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        if candidates == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _greedy_clique_cover(g, candidates) <= best_size:
            return
        # branch on a maximum-degree vertex of the candidate subgraph
        v_best, deg_best = -1, -1
        for v in iter_bits(candidates):
            d = (g.adj[v] & candidates).bit_count()
            if d > deg_best:
                v_best, deg_best = v, d
        dfs(candidates & ~(g.adj[v_best] | 1 << v_best), chosen | 1 << v_best, size + 1)
        dfs(candidates & ~(1 << v_best), chosen, size)

    dfs(g.vertex_mask(), 0, 0)
    return InvariantValue("alpha", best_size, bits_tuple(best_mask))


def clique_number(g: Graph) -> InvariantValue:
    res = independence_number(complement(g))
    return InvariantValue("omega", res.value, res.witness)


def vertex_cover_number(g: Graph) -> InvariantValue:
    """Gallai: the complement of a maximum independent set is a minimum cover."""
    alpha = independence_number(g)
    cover = tuple(v for v in range(g.n) if v not in set(alpha.witness))
    return InvariantValue("beta", g.n - alpha.value, cover)


# ---------------------------------------------------------------------------
# Domination


def domination_number(g: Graph) -> InvariantValue:
    """Exact set-cover branch-and-bound over closed neighborhoods."""
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    size, mask, _ = min_hitting_set(closed)
    return InvariantValue("gamma", size, bits_tuple(mask))


# ---------------------------------------------------------------------------
# Matching


def _maximum_matching_mate(g: Graph) -> list[int]:
    """Maximum cardinality matching by augmenting paths with blossom shrinking."""
    n = g.n
    mate = [-1] * n
    adj = [list(iter_bits(g.adj[v])) for v in range(n)]

    def find_augmenting(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_queue[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            x = a
            while True:
                x = base[x]
                seen[x] = True
                if mate[x] == -1:
                    break
                x = parent[mate[x]]
            y = b
            while True:
                y = base[y]
                if seen[y]:
                    return y
                y = parent[mate[y]]

        def mark_blossom(x: int, anchor: int, child: int, flower: list[bool]) -> None:
            while base[x] != anchor:
                flower[base[x]] = True
                flower[base[mate[x]]] = True
                parent[x] = child
                child = mate[x]
                x = parent[mate[x]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    anchor = lca(v, to)
                    flower = [False] * n
                    mark_blossom(v, anchor, to, flower)
                    mark_blossom(to, anchor, v, flower)
                    for i in range(n):
                        if flower[base[i]]:
                            base[i] = anchor
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # augment along the alternating path back to root
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = nxt
                        return True
                    if not in_queue[mate[to]]:
                        in_queue[mate[to]] = True
                        queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            find_augmenting(v)
    return mate


def matching_number(g: Graph) -> InvariantValue:
    mate = _maximum_matching_mate(g)
    edges = tuple(
        (v, mate[v]) for v in range(g.n) if mate[v] > v
    )
    return InvariantValue("alpha_prime", len(edges), edges)


# ---------------------------------------------------------------------------
# Coloring


def _dsatur_greedy(g: Graph, vertices: Optional[int] = None) -> list[int]:
    """DSATUR greedy coloring; returns color per vertex (-1 off-domain)."""
    domain = g.vertex_mask() if vertices is None else vertices
    colors = [-1] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    remaining = list(iter_bits(domain))
    while remaining:
        v = max(
            remaining,
            key=lambda u: (len(neighbor_colors[u]), (g.adj[u] & domain).bit_count(), -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        remaining.remove(v)
        for u in iter_bits(g.adj[v] & domain):
            if colors[u] < 0:
                neighbor_colors[u].add(c)
    return colors


def _greedy_clique(g: Graph) -> int:
    """A (not necessarily maximum) clique mask, grown from a max-degree seed."""
    if g.n == 0:
        return 0
    seed = max(range(g.n), key=lambda v: (g.degree(v), -v))
    clique = 1 << seed
    common = g.adj[seed]
    while common:
        v = max(
            iter_bits(common),
            key=lambda u: ((g.adj[u] & common).bit_count(), -u),
        )
        clique |= 1 << v
        common &= g.adj[v]
    return clique


def colorable_with(g: Graph, k: int) -> Optional[list[int]]:
    """Backtracking k-colorability in DSATUR order; None when impossible."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None if g.n else []
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            cand = (len(neighbor_colors[v]), g.degree(v), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    used_colors = 0

    def assign(v: int, c: int) -> list[int]:
        touched = []
        colors[v] = c
        for u in iter_bits(g.adj[v]):
            if colors[u] < 0 and c not in neighbor_colors[u]:
                neighbor_colors[u].add(c)
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        colors[v] = -1
        for u in touched:
            neighbor_colors[u].discard(c)

    def dfs(colored: int) -> bool:
        nonlocal used_colors
        if colored == n:
            return True
        v = pick()
        limit = min(k, used_colors + 1)
        for c in range(limit):
            if c in neighbor_colors[v]:
                continue
            bump = c == used_colors
            if bump:
                used_colors += 1
            touched = assign(v, c)
            if dfs(colored + 1):
                return True
            undo(v, c, touched)
            if bump:
                used_colors -= 1
        return False

    return list(colors) if dfs(0) else None


def chromatic_number(g: Graph) -> InvariantValue:
    """Exact chromatic number, DSATUR-seeded; witness is a proper coloring."""
    if g.n == 0:
        return InvariantValue("chi", 0, ())
    if g.m == 0:
        return InvariantValue("chi", 1, tuple([0] * g.n))
    ub_colors = _dsatur_greedy(g)
    ub = max(ub_colors) + 1
    lb = _greedy_clique(g).bit_count()
    for k in range(lb, ub):
        attempt = colorable_with(g, k)
        if attempt is not None:
            return InvariantValue("chi", k, tuple(attempt))
    return InvariantValue("chi", ub, tuple(ub_colors))


def _line_graph(g: Graph) -> Graph:
    edges = []
    for i, (u1, v1) in enumerate(g.edges):
        for j in range(i + 1, g.m):
            u2, v2 = g.edges[j]
            if u1 in (u2, v2) or v1 in (u2, v2):
                edges.append((i, j))
    return Graph(g.m, edges)


def edge_chromatic_number(g: Graph) -> tuple[InvariantValue, bool]:
    """Exact chromatic index inside the Vizing window, plus the class-1 flag.

    The witness assigns a color to each canonical edge.
    """
    if g.m == 0:
        return InvariantValue("chi_prime", 0, ()), True
    delta = max(g.degree(v) for v in range(g.n))
    lg = _line_graph(g)
    coloring = colorable_with(lg, delta)
    if coloring is not None:
        return InvariantValue("chi_prime", delta, tuple(coloring)), True
    coloring = colorable_with(lg, delta + 1)
    if coloring is None:
        raise InternalInvariantViolation(
            "edge coloring outside the Vizing window {Delta, Delta+1}"
        )
    return InvariantValue("chi_prime", delta + 1, tuple(coloring)), False


# ---------------------------------------------------------------------------
# Maximum average degree


class _Dinic:
    """Max-flow with exact Fraction capacities; tiny networks only."""

    def __init__(self, size: int):
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[Fraction] = []

    def add_edge(self, a: int, b: int, capacity: Fraction) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(capacity)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(Fraction(0))

    def max_flow(self, s: int, t: int) -> Fraction:
        flow = Fraction(0)
        while True:
            level = [-1] * self.size
            level[s] = 0
            frontier = [s]
            while frontier:
                nxt = []
                for v in frontier:
                    for eid in self.head[v]:
                        if self.cap[eid] > 0 and level[self.to[eid]] < 0:
                            level[self.to[eid]] = level[v] + 1
                            nxt.append(self.to[eid])
                frontier = nxt
            if level[t] < 0:
                return flow
            it = [0] * self.size

            def push(v: int, limit: Fraction) -> Fraction:
                if v == t:
                    return limit
                while it[v] < len(self.head[v]):
                    eid = self.head[v][it[v]]
                    u = self.to[eid]
                    if self.cap[eid] > 0 and level[u] == level[v] + 1:
                        got = push(u, min(limit, self.cap[eid]))
                        if got > 0:
                            self.cap[eid] -= got
                            self.cap[eid ^ 1] += got
                            return got
                    it[v] += 1
                return Fraction(0)

            while True:
                pushed = push(s, Fraction(10**30))
                if pushed <= 0:
                    break
                flow += pushed

    def min_cut_source_side(self, s: int) -> int:
        mask = 0
        seen = [False] * self.size
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            mask |= 1 << v
            for eid in self.head[v]:
                u = self.to[eid]
                if self.cap[eid] > 0 and not seen[u]:
                    seen[u] = True
                    stack.append(u)
        return mask


def _subgraph_denser_than(g: Graph, guess: Fraction) -> Optional[int]:
    """Vertex mask of a subgraph with |E|/|V| > guess, or None."""
    n, m = g.n, g.m
    net = _Dinic(n + 2)
    s, t = n, n + 1
    for v in range(n):
        net.add_edge(s, v, Fraction(m))
        net.add_edge(v, t, Fraction(m) + 2 * guess - g.degree(v))
    for u, v in g.edges:
        net.add_edge(u, v, Fraction(1))
        net.add_edge(v, u, Fraction(1))
    flow = net.max_flow(s, t)
    if flow >= Fraction(m) * n:
        return None
    side = net.min_cut_source_side(s) & ((1 << n) - 1)
    return side if side else None


def _edges_inside(g: Graph, mask: int) -> int:
    return sum((g.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2


def max_average_degree(g: Graph) -> InvariantValue:
    """Exact mad(G) as a Fraction via flow-checked density binary search."""
    if g.n == 0:
        raise ParseError("mad undefined for the empty-order graph")
    if g.m == 0:
        return InvariantValue("mad", Fraction(0), (0,))
    lo = Fraction(g.m, g.n)
    witness = g.vertex_mask()
    hi = Fraction(g.n - 1, 2)
    gap = Fraction(1, g.n * g.n)
    while hi - lo >= gap:
        guess = (lo + hi) / 2
        side = _subgraph_denser_than(g, guess)
        if side is None:
            hi = guess
        else:
            density = Fraction(_edges_inside(g, side), side.bit_count())
            if density <= lo:
                raise InternalInvariantViolation(
                    "flow cut returned a non-improving density witness"
                )
            lo, witness = density, side
    return InvariantValue("mad", 2 * lo, bits_tuple(witness))


# ---------------------------------------------------------------------------
# Witness validation helpers (used by tests and the CLI --verify path)


def validate_witness(g: Graph, inv: InvariantValue) -> bool:
    """Re-check that an invariant's witness realizes its claimed value."""
    name, value, w = inv.name, inv.value, inv.witness
    if name in ("alpha", "omega"):
        target = g if name == "alpha" else complement(g)
        mask = sum(1 << v for v in w)
        if len(w) != value:
            return False
        return all(target.adj[v] & mask == 0 for v in w)
    if name == "beta":
        if len(w) != value:
            return False
        cover = set(w)
        return all(u in cover or v in cover for u, v in g.edges)
    if name == "gamma":
        mask = sum(1 << v for v in w)
        if len(w) != value:
            return False
        return all(
            mask >> v & 1 or g.adj[v] & mask for v in range(g.n)
        )
    if name == "alpha_prime":
        if len(w) != value:
            return False
        seen: set[int] = set()
        for u, v in w:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True
    if name == "chi":
        colors = w
        if g.n == 0:
            return value == 0
        if len(set(colors)) != value:
            return False
        return all(colors[u] != colors[v] for u, v in g.edges)
    if name == "chi_prime":
        colors = w
        if g.m == 0:
            return value == 0
        if len(set(colors)) != value:
            return False
        for i, (u1, v1) in enumerate(g.edges):
            for j in range(i + 1, g.m):
                u2, v2 = g.edges[j]
                if {u1, v1} & {u2, v2} and colors[i] == colors[j]:
                    return False
        return True
    if name == "mad":
        mask = sum(1 << v for v in w)
        if mask == 0:
            return False
        return Fraction(2 * _edges_inside(g, mask), mask.bit_count()) == value
    raise ValueError(f"unknown invariant {name}")
