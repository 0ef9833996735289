"""Explicit orientations and graph families with checkable certificates.

Every construction pins down "arbitrary" edge directions to the
lowest-index-endpoint-first rule so repeated runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .digraph import GammaValue, Orientation, gamma_directed, is_dds
from .errors import ParseError
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    mask_of,
)
from .invariants import domination_number, independence_number


@dataclass(frozen=True)
class Certificate:
    """A witness orientation with a claimed domination value and DDS."""

    orientation: Orientation
    claimed_gamma: int
    dds_witness: tuple[int, ...]
    claim_kind: str  # "exact" | "lower-bound" | "property"

    def witness_mask(self) -> int:
        return mask_of(self.dds_witness)


def verify_certificate(cert: Certificate, *, exact: bool = False) -> bool:
    """Check the witness DDS; with ``exact`` also re-solve the orientation."""
    if len(cert.dds_witness) != cert.claimed_gamma:
        return False
    if not is_dds(cert.orientation, cert.witness_mask()):
        return False
    if exact or cert.claim_kind == "exact":
        return gamma_directed(cert.orientation).value == cert.claimed_gamma
    return True


def _oriented_bits(g: Graph, source_set: int, inner_bits: dict[int, int]) -> int:
    """Direction bits: out of ``source_set`` across the cut, fixed bits inside,
    lowest-index-first elsewhere."""
    bits = 0
    for i, (u, v) in enumerate(g.edges):
        u_in = source_set >> u & 1
        v_in = source_set >> v & 1
        if u_in and not v_in:
            pass  # u -> v is bit 0
        elif v_in and not u_in:
            bits |= 1 << i
        elif i in inner_bits:
            bits |= inner_bits[i] << i
    return bits


def independent_set_orientation(g: Graph) -> Certificate:
    """Orient every cut edge out of a maximum independent set.

    No member of the set can be dominated from outside, so the set is forced
    into every DDS while also dominating everything else: gamma equals the
    independence number, exactly.
    """
    alpha = independence_number(g)
    a_mask = mask_of(alpha.witness)
    bits = _oriented_bits(g, a_mask, {})
    return Certificate(
        orientation=Orientation(g, bits),
        claimed_gamma=alpha.value,
        dds_witness=tuple(alpha.witness),
        claim_kind="exact",
    )


def dominating_set_orientation(g: Graph) -> Certificate:
    """Orient every cut edge out of a minimum dominating set."""
    gamma = domination_number(g)
    s_mask = mask_of(gamma.witness)
    bits = _oriented_bits(g, s_mask, {})
    return Certificate(
        orientation=Orientation(g, bits),
        claimed_gamma=gamma.value,
        dds_witness=tuple(gamma.witness),
        claim_kind="exact",
    )


def outerplanar_extremal(n: int) -> Certificate:
    """Fan-triangulation orientation attaining the outerplanar maximum.

    Directed outer cycle 0 -> 1 -> ... -> n-1 -> 0 plus hub chords at
    vertex 0. Even n: all chords point into the hub; odd n: chords from
    even positions point in, chords to odd positions point out.
    """
    if n < 4:
        raise ParseError("outerplanar extremal construction needs n >= 4")
    cycle_arcs = [(i, (i + 1) % n) for i in range(n)]
    if n % 2 == 0:
        chord_arcs = [(u, 0) for u in range(2, n - 1)]
        claimed = n // 2
        witness = tuple(range(1, n, 2))
    else:
        chord_arcs = [(u, 0) for u in range(2, n - 1, 2)]
        chord_arcs += [(0, u) for u in range(3, n - 1, 2)]
        claimed = (n + 1) // 2
        witness = (0,) + tuple(range(1, n - 1, 2))
    g = Graph(n, cycle_arcs + chord_arcs)
    d = Orientation.from_arcs(g, cycle_arcs + chord_arcs)
    cert = Certificate(d, claimed, witness, claim_kind="exact")
    if not is_dds(d, cert.witness_mask()):
        raise AssertionError("construction produced an invalid witness DDS")
    return cert


def extend_orientation(g: Graph, vertices: Iterable[int], inner: Orientation) -> Orientation:
    """Extend an orientation of the induced subgraph to all of ``g``.

    Cut edges leave the subgraph's vertex set; edges outside it follow the
    lowest-index-first rule. The directed domination number can only grow.
    """
    vs = sorted(set(vertices))
    sub = induced_subgraph(g, vs)
    if inner.base != sub:
        raise ParseError("orientation does not match the induced subgraph")
    u_mask = mask_of(vs)
    back = {i: v for i, v in enumerate(vs)}
    inner_bits: dict[int, int] = {}
    for (a, b), idx in zip(sub.edges, range(sub.m)):
        u, v = back[a], back[b]
        inner_bits[g.edge_index(u, v)] = inner.bits >> idx & 1
    bits = _oriented_bits(g, u_mask, inner_bits)
    return Orientation(g, bits)


def tightness_family(kind: str, **params: int) -> Graph:
    """Named extremal families: 'rkt', 'rk3-sk1', 'kbar-kk'."""
    if kind == "rkt":
        r, t = params["r"], params["t"]
        if r < 1 or t < 1:
            raise ParseError("rkt needs r >= 1 and t >= 1")
        return disjoint_union([complete_graph(t)] * r)
    if kind == "rk3-sk1":
        r, s = params["r"], params["s"]
        if r < 0 or s < 0:
            raise ParseError("rk3-sk1 needs nonnegative r, s")
        return disjoint_union([complete_graph(3)] * r + [empty_graph(1)] * s)
    if kind == "kbar-kk":
        n, k = params["n"], params["k"]
        if not 1 <= k <= n:
            raise ParseError("kbar-kk needs 1 <= k <= n")
        return disjoint_union([empty_graph(n - k), complete_graph(k)])
    raise ParseError(f"unknown family kind {kind!r}")


def random_tournament(n: int, seed: int) -> Orientation:
    """Orientation of K_n by independent fair coins from a counter-based RNG."""
    if n < 1:
        raise ParseError("tournament needs n >= 1")
    g = complete_graph(n)
    rng = np.random.Generator(np.random.Philox(seed))
    coins = rng.random(g.m)
    bits = 0
    for i in range(g.m):
        if coins[i] < 0.5:
            bits |= 1 << i
    return Orientation(g, bits)


def quadratic_residue_tournament(p: int) -> Orientation:
    """Tournament on Z_p with arcs i -> j iff j - i is a nonzero square mod p.

    Requires a prime p congruent to 3 mod 4, so that exactly one of d, -d is
    a square for every nonzero d.
    """
    if p < 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ParseError("p must be prime")
    if p % 4 != 3:
        raise ParseError("p must be congruent to 3 mod 4")
    squares = {(x * x) % p for x in range(1, p)}
    arcs = []
    for i in range(p):
        for j in range(i + 1, p):
            if (j - i) % p in squares:
                arcs.append((i, j))
            else:
                arcs.append((j, i))
    return Orientation.from_arcs(complete_graph(p), arcs)


def k_domination_property(
    d: Orientation, k: int
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Test whether every k-set of vertices is fully dominated by an outsider.

    Exhaustive over all k-subsets; returns the first failing set in
    lexicographic order when the property does not hold.
    """
    if not d.is_tournament():
        raise ParseError("k-domination property is defined for tournaments")
    n = d.n
    if k > n - 1:
        raise ParseError("need k <= n - 1")
    for combo in combinations(range(n), k):
        smask = mask_of(combo)
        if not any(
            d.out_masks[u] & smask == smask
            for u in range(n)
            if not (smask >> u & 1)
        ):
            return False, combo
    return True, None
