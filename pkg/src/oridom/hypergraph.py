"""Hypergraphs, exact (r-)transversal solvers and the randomized cover.

The branch-and-bound hitting-set solver here is the workhorse behind every
domination computation in the package: a directed dominating set is exactly
a transversal of the closed in-neighborhood hypergraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import BudgetExceededError, InfeasibleError, ParseError
from .graph import bits_tuple, iter_bits, mask_of


class Hypergraph:
    """Vertex universe [0, n) plus a multiset of nonempty vertex-set edges."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[int | Iterable[int]]):
        if n < 0:
            raise ParseError("hypergraph order must be nonnegative")
        masks = []
        full = (1 << n) - 1
        for e in edges:
            mask = e if isinstance(e, int) else mask_of(e)
            if mask == 0:
                raise ParseError("hypergraph edge must be nonempty")
            if mask & ~full:
                raise ParseError("hypergraph edge contains out-of-range vertex")
            masks.append(mask)
        self.n = n
        self.edges = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_sizes(self) -> tuple[int, ...]:
        return tuple(e.bit_count() for e in self.edges)

    def uniform_k(self) -> Optional[int]:
        """Common edge size if the hypergraph is uniform, else None."""
        sizes = set(self.edge_sizes())
        return sizes.pop() if len(sizes) == 1 else None

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TransversalResult:
    vertices: tuple[int, ...]
    size: int
    r: int
    mode: str  # "exact" | "randomized"
    seed: Optional[int] = None

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``n m`` header format with one vertex list per edge line."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty hypergraph input")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("hypergraph header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("hypergraph header must be two integers") from None
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            vs = [int(t) for t in ln.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex in edge line: {ln!r}") from None
        if any(v < 0 or v >= n for v in vs):
            raise ParseError(f"edge vertex out of range in line: {ln!r}")
        edges.append(vs)
    return Hypergraph(n, edges)


def is_r_transversal(h: Hypergraph, mask: int, r: int = 1) -> bool:
    return all((e & mask).bit_count() >= r for e in h.edges)


class NodeBudget:
    """Shared node-expansion counter with an optional hard budget."""

    __slots__ = ("count", "budget")

    def __init__(self, budget: Optional[int] = None):
        self.count = 0
        self.budget = budget

    def tick(self) -> None:
        self.count += 1
        if self.budget is not None and self.count > self.budget:
            raise BudgetExceededError(f"node budget {self.budget} exhausted")


def greedy_hitting_set(edges: list[int]) -> int:
    """Greedy cover: repeatedly take the vertex hitting most uncovered edges."""
    chosen = 0
    uncovered = list(edges)
    while uncovered:
        support = 0
        for e in uncovered:
            support |= e
        best_v, best_hits = -1, -1
        for v in iter_bits(support):
            hits = sum(1 for e in uncovered if e >> v & 1)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen |= 1 << best_v
        uncovered = [e for e in uncovered if not (e >> best_v & 1)]
    return chosen


def _pack_lower_bound(uncovered: list[int], banned: int) -> int:
    """Greedy disjoint-edge packing; each packed edge needs its own vertex."""
    taken = 0
    count = 0
    for e in uncovered:
        avail = e & ~banned
        if avail and not (avail & taken):
            taken |= avail
            count += 1
    return count


def min_hitting_set(
    edges: Iterable[int],
    *,
    stop_at: Optional[int] = None,
    cutoff: Optional[int] = None,
    nodes: Optional[NodeBudget] = None,
) -> tuple[int, int, bool]:
    """Exact minimum hitting set over bitset edges.

    Returns (size, witness_mask, completed). With ``stop_at`` the search
    aborts (completed=False) as soon as it holds any hitting set of size
    <= stop_at. With ``cutoff`` only hitting sets of size < cutoff are
    searched for: a completed run whose size is >= cutoff proves the optimum
    is >= cutoff without exhibiting it.

    Raises InfeasibleError when an empty edge is present.
    """
    work = sorted(set(edges), key=lambda e: (e.bit_count(), e))
    if any(e == 0 for e in work):
        raise InfeasibleError("empty edge: no transversal exists")
    minimal: list[int] = []
    for e in work:  # supersets of an already-kept edge are redundant
        if not any(e & kept == kept for kept in minimal):
            minimal.append(e)
    if not minimal:
        return 0, 0, True
    if nodes is None:
        nodes = NodeBudget()

    greedy = greedy_hitting_set(minimal)
    best_size = greedy.bit_count()
    best_mask = greedy
    if stop_at is not None and best_size <= stop_at:
        return best_size, best_mask, False
    limit = best_size if cutoff is None else min(best_size, cutoff)

    aborted = False

    def dfs(uncovered: list[int], chosen: int, size: int, banned: int) -> None:
        nonlocal best_size, best_mask, limit, aborted
        if aborted:
            return
        nodes.tick()
        if not uncovered:
            if size < best_size:
                best_size, best_mask = size, chosen
                limit = min(limit, best_size)
                if stop_at is not None and best_size <= stop_at:
                    aborted = True
            return
        if size + _pack_lower_bound(uncovered, banned) >= limit:
            return
        target = None
        for e in uncovered:
            avail = e & ~banned
            if avail == 0:
                return  # edge can no longer be hit on this branch
            if target is None or avail.bit_count() < target.bit_count():
                target = avail
        cands = sorted(
            iter_bits(target),
            key=lambda v: (-sum(1 for e in uncovered if e >> v & 1), v),
        )
        new_banned = banned
        for v in cands:
            rest = [e for e in uncovered if not (e >> v & 1)]
            dfs(rest, chosen | 1 << v, size + 1, new_banned)
            if aborted:
                return
            new_banned |= 1 << v

    dfs(minimal, 0, 0, 0)
    return best_size, best_mask, not aborted


def transversal_number(
    h: Hypergraph,
    *,
    budget: Optional[int] = None,
) -> TransversalResult:
    """Exact transversal number with witness."""
    nodes = NodeBudget(budget)
    size, mask, _ = min_hitting_set(h.edges, nodes=nodes)
    return TransversalResult(bits_tuple(mask), size, r=1, mode="exact")


def _greedy_multicover(edges: list[int], n: int, r: int) -> int:
    chosen = 0
    deficits = [r] * len(edges)
    while any(d > 0 for d in deficits):
        best_v, best_gain = -1, -1
        for v in range(n):
            if chosen >> v & 1:
                continue
            gain = sum(
                1 for e, d in zip(edges, deficits) if d > 0 and e >> v & 1
            )
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_gain <= 0:
            raise InfeasibleError("multicover demands cannot be met")
        chosen |= 1 << best_v
        deficits = [
            d - 1 if d > 0 and e >> best_v & 1 else d
            for e, d in zip(edges, deficits)
        ]
    return chosen


def _multicover_pack_bound(edges: list[int], deficits: list[int], free: int) -> int:
    taken = 0
    total = 0
    for e, d in zip(edges, deficits):
        if d <= 0:
            continue
        avail = e & free
        if avail and not (avail & taken):
            taken |= avail
            total += d
    return total


def min_multicover(
    edges: list[int],
    n: int,
    r: int,
    *,
    nodes: Optional[NodeBudget] = None,
) -> tuple[int, int]:
    """Exact minimum set T with |T & e| >= r for every edge; returns (size, mask)."""
    if any(e.bit_count() < r for e in edges):
        raise InfeasibleError(f"an edge has fewer than r={r} vertices")
    if not edges or r == 0:
        return 0, 0
    if nodes is None:
        nodes = NodeBudget()
    greedy = _greedy_multicover(edges, n, r)
    best_size = greedy.bit_count()
    best_mask = greedy

    def dfs(chosen: int, banned: int, size: int) -> None:
        nonlocal best_size, best_mask
        nodes.tick()
        deficits = [r - (e & chosen).bit_count() for e in edges]
        free = ~(chosen | banned)
        for e, d in zip(edges, deficits):
            if d > 0 and (e & free).bit_count() < d:
                return
        if all(d <= 0 for d in deficits):
            if size < best_size:
                best_size, best_mask = size, chosen
            return
        if size + _multicover_pack_bound(edges, deficits, free) >= best_size:
            return
        target = max(
            (i for i, d in enumerate(deficits) if d > 0),
            key=lambda i: (deficits[i], -i),
        )
        avail = edges[target] & free
        v = max(
            iter_bits(avail),
            key=lambda w: (
                sum(1 for e, d in zip(edges, deficits) if d > 0 and e >> w & 1),
                -w,
            ),
        )
        dfs(chosen | 1 << v, banned, size + 1)
        dfs(chosen, banned | 1 << v, size)

    dfs(0, 0, 0)
    return best_size, best_mask


def r_transversal_number(
    h: Hypergraph,
    r: int,
    *,
    budget: Optional[int] = None,
) -> TransversalResult:
    """Exact r-transversal number; every edge must have size >= r."""
    if r < 1:
        raise ParseError("r must be at least 1")
    if r == 1:
        res = transversal_number(h, budget=budget)
        return res
    nodes = NodeBudget(budget)
    size, mask = min_multicover(list(h.edges), h.n, r, nodes=nodes)
    return TransversalResult(bits_tuple(mask), size, r=r, mode="exact")


def randomized_r_transversal(
    h: Hypergraph,
    r: int,
    seed: int,
) -> TransversalResult:
    """Randomized r-transversal: independent picks at p = ln k / k, then repair.

    Each vertex joins X independently with probability p; every edge still
    short of r picked vertices is topped up with its lowest-index unpicked
    vertices. The output is always a valid r-transversal.
    """
    k = h.uniform_k()
    if k is None:
        raise ParseError("randomized transversal requires a uniform hypergraph")
    if k < 2:
        raise ParseError("uniform edge size must be at least 2")
    if not (1 <= r <= k):
        raise ParseError("need k >= r >= 1")
    p = math.log(k) / k
    if not (1.0 - p) > 0.5:
        raise ParseError(f"rejecting k={k}: sampling probability too large")
    rng = np.random.Generator(np.random.Philox(seed))
    coins = rng.random(h.n)
    x_mask = 0
    for v in range(h.n):
        if coins[v] < p:
            x_mask |= 1 << v
    y_mask = 0
    for e in h.edges:
        have = (e & x_mask).bit_count()
        if have <= r - 1:
            need = r - have
            for v in iter_bits(e & ~x_mask):
                y_mask |= 1 << v
                need -= 1
                if need == 0:
                    break
    t_mask = x_mask | y_mask
    return TransversalResult(
        bits_tuple(t_mask), t_mask.bit_count(), r=r, mode="randomized", seed=seed
    )
