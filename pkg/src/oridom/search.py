"""Orientation enumeration and exact directed domination extremes.

The exact solver for the maximum walks the direction bits depth-first. A
partial orientation's arcs-only digraph already upper-bounds every
completion (adding arcs never increases the domination number), so a branch
dies as soon as that digraph admits a cover no larger than the incumbent.
The dual bound (all unoriented edges counted both ways) drives the
minimum-side verification.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from . import bounds as bounds_mod
from .constructions import (
    Certificate,
    dominating_set_orientation,
    independent_set_orientation,
)
from .digraph import Orientation, gamma_directed
from .errors import BudgetExceededError, InternalInvariantViolation, ParseError
from .graph import Graph, iter_bits
from .hypergraph import NodeBudget, greedy_hitting_set, min_hitting_set
from .invariants import max_average_degree

EXHAUSTIVE_EDGE_CAP = 20


@dataclass(frozen=True)
class GammaDResult:
    value: int
    exact: bool
    interval: tuple[int, int]
    certificate: Optional[Certificate]
    closing_bound: Optional[str]
    orientations_explored: int
    verified_exhaustively: bool = False


def enumerate_orientations(
    g: Graph, fixed: Iterable[tuple[int, int]] = ()
) -> Iterator[Orientation]:
    """Stream every completion of a partial arc assignment.

    Direction bit vectors are emitted in lexicographic order with the lowest
    canonical edge index as the most significant position; 2^(m - |fixed|)
    orientations in total.
    """
    fixed_bits = 0
    fixed_positions = 0
    for tail, head in fixed:
        idx = g.edge_index(tail, head)  # raises on non-edges
        if fixed_positions >> idx & 1:
            raise ParseError(f"edge ({tail}, {head}) fixed twice")
        fixed_positions |= 1 << idx
        if tail > head:
            fixed_bits |= 1 << idx
    free = [i for i in range(g.m) if not fixed_positions >> i & 1]
    f = len(free)
    for count in range(1 << f):
        bits = fixed_bits
        for j, pos in enumerate(free):
            if count >> (f - 1 - j) & 1:
                bits |= 1 << pos
        yield Orientation(g, bits)


def coverable_within(
    out_closed: list[int],
    in_closed: list[int],
    target: int,
    size_budget: int,
    nodes: Optional[NodeBudget] = None,
    prefiltered: bool = False,
) -> bool:
    """Can <= size_budget closed out-neighborhoods cover every target vertex?

    Asked about the whole vertex set, this decides whether the digraph's
    domination number is at most size_budget. A coverage-sum bound settles
    most negative instances and a greedy cover most positive ones; the exact
    search branches on the uncovered vertex with the fewest closed
    in-neighbors and memoizes failed (cover-set, budget) states.
    """
    if target == 0:
        return True
    if size_budget <= 0:
        return False
    n_all = target.bit_count()
    if size_budget >= n_all:
        return True
    if nodes is not None:
        nodes.tick()
    if prefiltered:
        max_out = max((o & target).bit_count() for o in out_closed)
    else:
        sizes = sorted(((o & target).bit_count() for o in out_closed), reverse=True)
        max_out = sizes[0]
        if sum(sizes[:size_budget]) < n_all:
            return False
    remaining = target
    for _ in range(size_budget):
        best, best_cov = -1, 0
        for v, o in enumerate(out_closed):
            cov = (o & remaining).bit_count()
            if cov > best_cov:
                best, best_cov = v, cov
        remaining &= ~out_closed[best]
        if remaining == 0:
            return True
    in_sizes = [c.bit_count() for c in in_closed]
    failed: dict[int, int] = {}

    def rec(rem: int, left: int) -> bool:
        if nodes is not None:
            nodes.tick()
        if rem.bit_count() > left * max_out:
            return False
        if failed.get(rem, 0) >= left:
            return False
        pick, pick_c = -1, n_all + 2
        t = rem
        while t:
            low = t & -t
            t ^= low
            v = low.bit_length() - 1
            c = in_sizes[v]
            if c < pick_c:
                pick, pick_c = v, c
        cands = in_closed[pick]
        while cands:
            low = cands & -cands
            cands ^= low
            nrem = rem & ~out_closed[low.bit_length() - 1]
            if nrem == 0 or rec(nrem, left - 1):
                return True
        failed[rem] = left
        return False

    return rec(target, size_budget)


class _SubrangeOutcome:
    __slots__ = ("value", "bits", "leaves", "budget_hit")

    def __init__(self) -> None:
        self.value = -1
        self.bits: Optional[int] = None
        self.leaves = 0
        self.budget_hit = False


def _max_dfs_subrange(
    g: Graph,
    prefix_bits: int,
    prefix_len: int,
    seed_value: int,
    ub_floor: int,
    budget: Optional[int],
    rank: int,
    closed_rank: list[int],
) -> _SubrangeOutcome:
    """Depth-first max search over one direction-bit subrange."""
    n, m = g.n, g.m
    edges = g.edges
    full = g.vertex_mask()
    out = _SubrangeOutcome()
    incumbent = seed_value
    nodes = NodeBudget(budget)

    in_closed = [1 << v for v in range(n)]
    out_closed = [1 << v for v in range(n)]
    out_sizes = [1] * n
    size_counts = [0] * (n + 2)
    for i in range(prefix_len):
        u, v = edges[i]
        if prefix_bits >> i & 1:
            u, v = v, u
        in_closed[v] |= 1 << u
        out_closed[u] |= 1 << v
        out_sizes[u] += 1
    for v in range(n):
        size_counts[out_sizes[v]] += 1

    bits_path = [prefix_bits]

    def record(value: int, bits: int) -> None:
        nonlocal incumbent
        incumbent = value
        out.value = value
        out.bits = bits

    def top_k_sum(k: int) -> int:
        total = 0
        for size in range(n, 0, -1):
            c = size_counts[size]
            if c:
                take = c if c < k else k
                total += take * size
                k -= take
                if k == 0:
                    break
        return total

    def partial_coverable(k: int, forced_tail: int) -> bool:
        """Does the arcs-only digraph have a dominating set of size <= k?

        ``forced_tail`` >= 0 asserts the parent digraph (one arc fewer, out
        of that vertex) was already refuted at the same k, so any new cover
        must contain the tail.
        """
        if k >= n:
            return True
        if top_k_sum(k) < n:
            return False
        if forced_tail >= 0:
            return coverable_within(
                out_closed, in_closed, full & ~out_closed[forced_tail], k - 1, nodes
            )
        return coverable_within(out_closed, in_closed, full, k, nodes, prefiltered=True)

    def dfs(i: int, forced_tail: int, parent_refuted: int) -> bool:
        """Returns True when the subrange is finished (closed or abandoned)."""
        if closed_rank[0] < rank:
            return True
        nodes.tick()
        fast = forced_tail if parent_refuted == incumbent else -1
        if partial_coverable(incumbent, fast):
            return False  # every completion stays at or below the incumbent
        if i == m:
            out.leaves += 1
            value = incumbent + 1
            while not coverable_within(out_closed, in_closed, full, value, nodes):
                value += 1
            record(value, bits_path[0])
            if incumbent >= ub_floor:
                closed_rank[0] = min(closed_rank[0], rank)
                return True
            return False
        refuted = incumbent
        u, v = edges[i]
        in_closed[v] |= 1 << u
        out_closed[u] |= 1 << v
        s_u = out_sizes[u]
        size_counts[s_u] -= 1
        size_counts[s_u + 1] += 1
        out_sizes[u] = s_u + 1
        stop = dfs(i + 1, u, refuted)
        in_closed[v] &= ~(1 << u)
        out_closed[u] &= ~(1 << v)
        size_counts[s_u + 1] -= 1
        size_counts[s_u] += 1
        out_sizes[u] = s_u
        if stop:
            return True
        bits_path[0] |= 1 << i
        in_closed[u] |= 1 << v
        out_closed[v] |= 1 << u
        s_v = out_sizes[v]
        size_counts[s_v] -= 1
        size_counts[s_v + 1] += 1
        out_sizes[v] = s_v + 1
        stop = dfs(i + 1, v, refuted)
        in_closed[u] &= ~(1 << v)
        out_closed[v] &= ~(1 << u)
        size_counts[s_v + 1] -= 1
        size_counts[s_v] += 1
        out_sizes[v] = s_v
        bits_path[0] &= ~(1 << i)
        return stop

    try:
        dfs(prefix_len, -1, -1)
    except BudgetExceededError:
        out.budget_hit = True
    return out


def upper_directed_domination(
    g: Graph,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> GammaDResult:
    """Exact maximum of the directed domination number over all orientations.

    Seeds the incumbent with the independent-set orientation, exits early
    when a certified upper bound is met, and falls back to a certified
    interval when the node budget runs out.
    """
    if workers < 1:
        raise ParseError("workers must be at least 1")
    if g.n == 0:
        cert = Certificate(Orientation(g, 0), 0, (), "exact")
        return GammaDResult(0, True, (0, 0), cert, None, 0)

    seed = independent_set_orientation(g)
    incumbent = seed.claimed_gamma
    best_bits = seed.orientation.bits
    ub_floor, ub_name = bounds_mod.best_upper_bound(g)
    if incumbent > ub_floor:
        raise InternalInvariantViolation(
            f"certified bounds crossed: seed {incumbent} > upper {ub_floor} ({ub_name})"
        )
    if incumbent == ub_floor:
        return GammaDResult(
            incumbent, True, (incumbent, incumbent), seed, ub_name, 0
        )

    m = g.m
    split_bits = 0
    while (1 << split_bits) < workers and split_bits < m:
        split_bits += 1
    nsub = 1 << split_bits
    sub_budget = None if budget is None else max(budget // nsub, 1)
    closed_rank = [nsub]  # lowest subrange rank that reached the upper bound

    def run(rank: int) -> _SubrangeOutcome:
        prefix = 0
        for j in range(split_bits):
            if rank >> (split_bits - 1 - j) & 1:
                prefix |= 1 << j
        return _max_dfs_subrange(
            g, prefix, split_bits, incumbent, ub_floor, sub_budget, rank, closed_rank
        )

    if workers == 1:
        outcomes = [run(rank) for rank in range(nsub)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run, range(nsub)))

    value = incumbent
    exact_flag = True
    explored = 0
    closing: Optional[str] = None
    for oc in outcomes:
        explored += oc.leaves
        if oc.budget_hit:
            exact_flag = False
        if oc.bits is not None and oc.value > value:
            value = oc.value
            best_bits = oc.bits
    if value >= ub_floor:
        closing = ub_name
        exact_flag = True
    if not exact_flag:
        witness = Orientation(g, best_bits)
        dds = gamma_directed(witness)
        cert = Certificate(witness, dds.value, dds.witness, "lower-bound")
        return GammaDResult(
            value, False, (value, ub_floor), cert, None, explored
        )
    witness = Orientation(g, best_bits)
    dds = gamma_directed(witness)
    if dds.value != value:
        raise InternalInvariantViolation(
            f"witness re-solve mismatch: {dds.value} != {value}"
        )
    cert = Certificate(witness, value, dds.witness, "exact")
    return GammaDResult(value, True, (value, value), cert, closing, explored)


def lower_directed_domination(
    g: Graph,
    *,
    verify_exhaustively: bool = False,
) -> GammaDResult:
    """Minimum of the directed domination number over all orientations.

    The constructed witness orientation always attains the (undirected)
    domination number. The optional exhaustive pass proves by branch and
    bound that no orientation does better.
    """
    cert = dominating_set_orientation(g)
    value = cert.claimed_gamma
    if not verify_exhaustively:
        return GammaDResult(value, True, (value, value), cert, None, 0)
    if g.m > EXHAUSTIVE_EDGE_CAP:
        raise ParseError(
            f"exhaustive verification capped at m <= {EXHAUSTIVE_EDGE_CAP}"
        )

    n, m = g.n, g.m
    edges = g.edges
    full = g.vertex_mask()
    # optimistic view: undecided edges dominate both ways
    in_closed = [g.adj[v] | 1 << v for v in range(n)]
    out_closed = [g.adj[v] | 1 << v for v in range(n)]
    leaves = 0
    found_smaller: Optional[int] = None

    def dfs(i: int) -> None:
        nonlocal leaves, found_smaller
        if found_smaller is not None:
            return
        if not coverable_within(out_closed, in_closed, full, value - 1):
            return  # even the optimistic digraph needs `value` dominators
        if i == m:
            leaves += 1
            size = 1
            while not coverable_within(out_closed, in_closed, full, size):
                size += 1
            found_smaller = size
            return
        u, v = edges[i]
        out_closed[v] &= ~(1 << u)
        in_closed[u] &= ~(1 << v)
        dfs(i + 1)
        out_closed[v] |= 1 << u
        in_closed[u] |= 1 << v
        out_closed[u] &= ~(1 << v)
        in_closed[v] &= ~(1 << u)
        dfs(i + 1)
        out_closed[u] |= 1 << v
        in_closed[v] |= 1 << u

    dfs(0)
    if found_smaller is not None:
        raise InternalInvariantViolation(
            f"an orientation beat the domination number: {found_smaller} < {value}"
        )
    return GammaDResult(value, True, (value, value), cert, None, leaves, True)


def hakimi_orientation(g: Graph) -> Orientation:
    """Orientation whose maximum out-degree is at most ceil(mad/2).

    Iterative improvement: while some vertex exceeds the target, reverse a
    directed path to a vertex with slack; the excess potential strictly
    drops each round.
    """
    mad = max_average_degree(g).value if g.n else 0
    target = -(-mad.numerator // (2 * mad.denominator)) if g.m else 0
    bits = 0
    out_masks = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        out_masks[u] |= 1 << v

    def reverse_path(path: list[int]) -> None:
        nonlocal bits
        for a, b in zip(path, path[1:]):
            idx = g.edge_index(a, b)
            bits ^= 1 << idx
            out_masks[a] &= ~(1 << b)
            out_masks[b] |= 1 << a

    while True:
        over = next(
            (
                v
                for v in range(g.n)
                if out_masks[v].bit_count() > target
            ),
            None,
        )
        if over is None:
            break
        parent = {over: -1}
        frontier = [over]
        goal = None
        while frontier and goal is None:
            nxt = []
            for v in frontier:
                for u in iter_bits(out_masks[v]):
                    if u not in parent:
                        parent[u] = v
                        if out_masks[u].bit_count() < target:
                            goal = u
                            break
                        nxt.append(u)
                if goal is not None:
                    break
            frontier = nxt
        if goal is None:
            raise InternalInvariantViolation(
                "no reversal path despite out-degree above ceil(mad/2)"
            )
        path = [goal]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        reverse_path(path[::-1])
    return Orientation(g, bits)
