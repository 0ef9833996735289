"""Orientations of graphs and directed domination on them.

An Orientation stores one direction bit per canonical edge of its base
graph (0 = low->high endpoint). Directed domination reduces to hitting the
closed in-neighborhood hypergraph, with an independent brute-force route
kept for cross-checking.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .errors import ParseError
from .graph import Graph, bits_tuple, iter_bits
from .hypergraph import Hypergraph, transversal_number

PATH_PARTITION_CAP = 14


class Orientation:
    """A direction assignment over the base graph's canonical edge list."""

    __slots__ = ("base", "bits", "out_masks", "in_masks")

    def __init__(self, base: Graph, bits: int):
        if bits < 0 or bits >> base.m:
            raise ParseError("direction bits outside canonical edge range")
        self.base = base
        self.bits = bits
        out_masks = [0] * base.n
        in_masks = [0] * base.n
        for i, (u, v) in enumerate(base.edges):
            if bits >> i & 1:
                u, v = v, u
            out_masks[u] |= 1 << v
            in_masks[v] |= 1 << u
        self.out_masks = tuple(out_masks)
        self.in_masks = tuple(in_masks)

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        bits = 0
        seen = set()
        for tail, head in arcs:
            idx = base.edge_index(tail, head)
            if idx in seen:
                raise ParseError(f"edge ({tail}, {head}) oriented twice")
            seen.add(idx)
            if tail > head:
                bits |= 1 << idx
        if len(seen) != base.m:
            raise ParseError("orientation must direct every edge exactly once")
        return cls(base, bits)

    def arcs(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i, (u, v) in enumerate(self.base.edges):
            out.append((v, u) if self.bits >> i & 1 else (u, v))
        return tuple(out)

    @property
    def n(self) -> int:
        return self.base.n

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def max_out_degree(self) -> int:
        return max((self.out_degree(v) for v in range(self.n)), default=0)

    def max_in_degree(self) -> int:
        return max((self.in_degree(v) for v in range(self.n)), default=0)

    def closed_in_neighborhood(self, v: int) -> int:
        return self.in_masks[v] | 1 << v

    def reverse(self) -> "Orientation":
        return Orientation(self.base, self.bits ^ ((1 << self.base.m) - 1))

    def is_tournament(self) -> bool:
        n = self.n
        return self.base.m == n * (n - 1) // 2

    def __repr__(self) -> str:
        return f"Orientation(n={self.n}, m={self.base.m}, bits={self.bits:#x})"


class GammaValue(NamedTuple):
    value: int
    witness: tuple[int, ...]


def is_dds(d: Orientation, mask: int) -> bool:
    """True when every vertex outside the set has an in-neighbor inside it."""
    for v in range(d.n):
        if not (mask >> v & 1) and not (d.in_masks[v] & mask):
            return False
    return True


def is_r_dds(d: Orientation, mask: int, r: int) -> bool:
    for v in range(d.n):
        if not (mask >> v & 1) and (d.in_masks[v] & mask).bit_count() < r:
            return False
    return True


def cinh(d: Orientation) -> Hypergraph:
    """Closed in-neighborhood hypergraph: one edge N^-[v] per vertex."""
    return Hypergraph(d.n, [d.closed_in_neighborhood(v) for v in range(d.n)])


def gamma_directed(d: Orientation, *, brute_force: bool = False) -> GammaValue:
    """Minimum directed dominating set.

    The default route solves the exact transversal problem on the closed
    in-neighborhood hypergraph; ``brute_force`` enumerates vertex subsets by
    increasing size and is intended as an independent oracle on small inputs.
    """
    if d.n == 0:
        return GammaValue(0, ())
    if brute_force:
        if d.base.m > 20:
            raise ParseError("brute-force mode capped at m <= 20")
        for size in range(d.n + 1):
            for combo in combinations(range(d.n), size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                if is_dds(d, mask):
                    return GammaValue(size, combo)
        raise AssertionError("unreachable: V itself is always a DDS")
    res = transversal_number(cinh(d))
    return GammaValue(res.size, res.vertices)


def gamma_r_directed(d: Orientation, r: int) -> GammaValue:
    """Minimum set S such that every vertex outside S has >= r in-neighbors in S.

    Vertices whose in-degree is below r can never be covered and are forced
    into S; if that exhausts the graph the answer is |V|.
    """
    if r < 1:
        raise ParseError("r must be at least 1")
    n = d.n
    if n == 0:
        return GammaValue(0, ())
    forced = 0
    for v in range(n):
        if d.in_degree(v) < r:
            forced |= 1 << v
    if forced.bit_count() == n:
        return GammaValue(n, tuple(range(n)))

    in_masks = d.in_masks
    best_size = n
    best_mask = (1 << n) - 1

    def shortfalls(chosen: int, banned: int) -> Optional[list[tuple[int, int]]]:
        """(vertex, deficit) for banned vertices; None when one is hopeless."""
        out = []
        free = ~(chosen | banned)
        for v in iter_bits(banned):
            need = r - (in_masks[v] & chosen).bit_count()
            if need > 0:
                if (in_masks[v] & free).bit_count() < need:
                    return None
                out.append((v, need))
        return out

    def pack_bound(shorts: list[tuple[int, int]], chosen: int, banned: int) -> int:
        free = ~(chosen | banned)
        taken = 0
        total = 0
        for v, need in shorts:
            avail = in_masks[v] & free
            if avail and not (avail & taken):
                taken |= avail
                total += need
        return total

    def dfs(idx: int, chosen: int, banned: int) -> None:
        nonlocal best_size, best_mask
        size = chosen.bit_count()
        if size >= best_size:
            return
        shorts = shortfalls(chosen, banned)
        if shorts is None:
            return
        if size + pack_bound(shorts, chosen, banned) >= best_size:
            return
        if idx == n:
            if not shorts:
                best_size, best_mask = size, chosen
            return
        if forced >> idx & 1:
            dfs(idx + 1, chosen | 1 << idx, banned)
            return
        dfs(idx + 1, chosen, banned | 1 << idx)
        dfs(idx + 1, chosen | 1 << idx, banned)

    dfs(0, forced, 0)
    return GammaValue(best_size, bits_tuple(best_mask))


def gamma_r_brute_force(d: Orientation, r: int) -> int:
    """Subset enumeration oracle for the r-domination solver."""
    if d.n > 16:
        raise ParseError("brute-force r-domination capped at n <= 16")
    for size in range(d.n + 1):
        for combo in combinations(range(d.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_r_dds(d, mask, r):
                return size
    return d.n


def min_path_partition(d: Orientation) -> list[list[int]]:
    """Minimum partition of V into vertex-disjoint directed paths (exact DP).

    Subset dynamic programming; capped at 14 vertices.
    """
    n = d.n
    if n > PATH_PARTITION_CAP:
        raise ParseError(f"path partition solver capped at n <= {PATH_PARTITION_CAP}")
    if n == 0:
        return []
    size = 1 << n
    INF = n + 1
    dp = [[INF] * n for _ in range(size)]
    choice: list[list[Optional[tuple[int, bool]]]] = [
        [None] * n for _ in range(size)
    ]
    for v in range(n):
        dp[1 << v][v] = 1
    for mask in range(size):
        row = dp[mask]
        for v in range(n):
            cur = row[v]
            if cur >= INF:
                continue
            free = ~mask & (size - 1)
            for u in iter_bits(free):
                nmask = mask | 1 << u
                extend = d.out_masks[v] >> u & 1
                if extend and cur < dp[nmask][u]:
                    dp[nmask][u] = cur
                    choice[nmask][u] = (v, True)
                if cur + 1 < dp[nmask][u]:
                    dp[nmask][u] = cur + 1
                    choice[nmask][u] = (v, False)
    full = size - 1
    last = min(range(n), key=lambda v: (dp[full][v], v))
    paths: list[list[int]] = []
    current: list[int] = []
    mask, v = full, last
    while True:
        current.append(v)
        prev = choice[mask][v]
        mask ^= 1 << v
        if prev is None:
            paths.append(current[::-1])
            break
        pv, extended = prev
        if not extended:
            paths.append(current[::-1])
            current = []
        v = pv
    paths.reverse()
    return paths


