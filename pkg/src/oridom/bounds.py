"""Closed-form lower/upper bounds and the certified sandwich interval.

Log base 2 is written ``log2``; natural log is ``ln`` (math.log). Entries
that are exact rationals stay Fractions end to end; transcendental entries
are floats floored/ceiled with a small guard band toward the safe side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InternalInvariantViolation
from .graph import Graph, structure
from .invariants import (
    chromatic_number,
    domination_number,
    edge_chromatic_number,
    independence_number,
    matching_number,
    max_average_degree,
)
from .graph import complement

Number = Union[int, Fraction, float]

_GUARD = 1e-9


def ceil_guarded(x: Number) -> int:
    """Integer floor for a certified lower bound (safe side: round down noise)."""
    if isinstance(x, float):
        return math.ceil(x - _GUARD)
    return math.ceil(x)


def floor_guarded(x: Number) -> int:
    if isinstance(x, float):
        return math.floor(x + _GUARD)
    return math.floor(x)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: Optional[Number]
    applicable: bool
    note: str
    k: Optional[int] = None  # minimizing parameter for swept entries


@dataclass(frozen=True)
class BoundsInputs:
    n: int
    m: int
    alpha: int
    alpha_prime: int
    gamma: int
    chi: int
    chi_prime: Optional[int]  # computed only when a regular-graph bound consumes it
    chi_complement: int
    delta: int
    max_degree: int
    diameter: float
    mad: Fraction
    regular_r: Optional[int]
    is_bipartite: bool
    is_connected: bool
    is_complete: bool
    class_one: Optional[bool]


@dataclass(frozen=True)
class BoundsReport:
    lower: tuple[BoundEntry, ...]
    upper: tuple[BoundEntry, ...]
    sandwich: tuple[int, int]
    inputs: BoundsInputs


def compute_inputs(g: Graph) -> BoundsInputs:
    """All invariant values the bound formulas consume."""
    st = structure(g)
    alpha = independence_number(g).value
    alpha_prime = matching_number(g).value
    gamma = domination_number(g).value
    chi = chromatic_number(g).value
    chi_complement = chromatic_number(complement(g)).value
    mad = max_average_degree(g).value if g.n else Fraction(0)
    regular_r = st.profile.regular_r
    chi_prime: Optional[int] = None
    class_one: Optional[bool] = None
    if regular_r is not None and g.n:
        cp, class_one = edge_chromatic_number(g)
        chi_prime = cp.value
    return BoundsInputs(
        n=g.n,
        m=g.m,
        alpha=alpha,
        alpha_prime=alpha_prime,
        gamma=gamma,
        chi=chi,
        chi_prime=chi_prime,
        chi_complement=chi_complement,
        delta=st.profile.min_degree,
        max_degree=st.profile.max_degree,
        diameter=st.diameter,
        mad=mad,
        regular_r=regular_r,
        is_bipartite=st.is_bipartite,
        is_connected=st.is_connected,
        is_complete=g.m == g.n * (g.n - 1) // 2,
        class_one=class_one,
    )


def _ceil_frac(x: Fraction) -> int:
    return math.ceil(x)


def lower_bounds(g: Graph, inputs: Optional[BoundsInputs] = None) -> list[BoundEntry]:
    iv = inputs or compute_inputs(g)
    n = iv.n
    entries = [BoundEntry("independence", iv.alpha, n >= 0, "maximum independent set")]
    if n >= 1 and iv.chi >= 1:
        entries.append(
            BoundEntry("chromatic-ratio", Fraction(n, iv.chi), True, "order over chromatic number")
        )
    else:
        entries.append(BoundEntry("chromatic-ratio", None, False, "needs n >= 1"))
    if n >= 1 and iv.is_connected:
        entries.append(
            BoundEntry(
                "diameter",
                (int(iv.diameter) + 1 + 1) // 2,
                True,
                "half the diameter plus one, rounded up",
            )
        )
    else:
        entries.append(
            BoundEntry("diameter", None, False, "diameter infinite: graph disconnected or empty")
        )
    if n >= 1:
        half_mad_up = _ceil_frac(iv.mad / 2)
        entries.append(
            BoundEntry(
                "mad-orientation",
                Fraction(n, half_mad_up + 1),
                True,
                "bounded out-degree orientation exists",
            )
        )
        half_delta_up = (iv.max_degree + 1) // 2
        entries.append(
            BoundEntry(
                "max-degree-orientation",
                Fraction(n, half_delta_up + 1),
                True,
                "mad is at most the maximum degree",
            )
        )
    else:
        entries.append(BoundEntry("mad-orientation", None, False, "needs n >= 1"))
        entries.append(BoundEntry("max-degree-orientation", None, False, "needs n >= 1"))
    if n >= 3:
        entries.append(
            BoundEntry(
                "complete-embedding-log",
                math.log2(n) - 2 * math.log2(math.log2(n)),
                True,
                "restriction of a worst-case complete-graph orientation",
            )
        )
    else:
        entries.append(
            BoundEntry("complete-embedding-log", None, False, "log log undefined for n <= 2")
        )
    return entries


def upper_bounds(
    g: Graph,
    inputs: Optional[BoundsInputs] = None,
    *,
    assert_perfect: bool = False,
) -> list[BoundEntry]:
    iv = inputs or compute_inputs(g)
    n, alpha = iv.n, iv.alpha
    entries = [
        BoundEntry("matching", n - iv.alpha_prime, True, "order minus matching number"),
        BoundEntry("order", n, True, "trivial"),
    ]
    if n >= 2 * iv.delta:
        entries.append(
            BoundEntry("min-degree", n - iv.delta, True, "matching number at least the minimum degree")
        )
    else:
        entries.append(BoundEntry("min-degree", None, False, "needs n >= 2 delta"))
    if n >= 1:
        entries.append(
            BoundEntry(
                "independence-chromatic",
                alpha * ((iv.chi + 1) // 2),
                True,
                "paired color classes",
            )
        )
        entries.append(
            BoundEntry("chromatic-matching", n - iv.chi // 2, True, "matching across color classes")
        )
        entries.append(
            BoundEntry(
                "order-independence-mean",
                Fraction(n + alpha, 2),
                True,
                "path partition of every orientation",
            )
        )
        t = iv.chi_complement
        entries.append(
            BoundEntry(
                "clique-cover-log",
                t * math.log2(math.ceil(Fraction(n, t)) + 1),
                True,
                "clique cover with balanced class sizes",
                k=t,
            )
        )
        best_dense: Optional[tuple[float, int]] = None
        for k in range(1, n + 1):
            if n % k == 0 and iv.delta * k >= (k - 1) * n:
                val = n * math.log2(k + 1) / k
                if best_dense is None or val < best_dense[0]:
                    best_dense = (val, k)
        entries.append(
            BoundEntry(
                "dense-min-degree",
                best_dense[0],
                True,
                "clique factor from high minimum degree",
                k=best_dense[1],
            )
        )
    r = iv.regular_r
    if r is not None and r >= 2:
        entries.append(
            BoundEntry(
                "regular-vizing",
                Fraction(n * (r + 2), 2 * (r + 1)),
                True,
                "matching from an edge-coloring class",
            )
        )
    else:
        entries.append(BoundEntry("regular-vizing", None, False, "needs an r-regular graph, r >= 2"))
    if r is not None and r >= 2 and iv.is_connected:
        if r % 2 == 0:
            value: Number = max(
                Fraction((r * r + 2 * r) * n, (r * r + r + 2) * 2),
                Fraction(n + 1, 2),
            )
        else:
            value = Fraction(
                (r**3 + r**2 - 6 * r + 2) * n + 2 * r - 2,
                2 * (r**3 - 3 * r),
            )
        entries.append(
            BoundEntry("regular-matching", value, True, "tight regular matching bounds")
        )
    else:
        entries.append(
            BoundEntry("regular-matching", None, False, "needs a connected r-regular graph, r >= 2")
        )
    if r is not None and r >= 1 and iv.class_one:
        entries.append(
            BoundEntry("regular-class1", Fraction(n, 2), True, "perfect matching per color class")
        )
    else:
        entries.append(
            BoundEntry("regular-class1", None, False, "needs a class-1 regular graph")
        )
    if r is not None and n >= 1 and 2 * r >= n:
        entries.append(
            BoundEntry("regular-dirac", (n + 1) // 2, True, "hamiltonian by high degree")
        )
    else:
        entries.append(BoundEntry("regular-dirac", None, False, "needs regular with r >= n/2"))
    if n >= 1 and (iv.is_bipartite or assert_perfect):
        reason = "bipartite graphs are perfect" if iv.is_bipartite else "perfection asserted by caller"
        entries.append(
            BoundEntry(
                "perfect-clique-cover-log",
                alpha * math.log2(math.ceil(Fraction(n, alpha)) + 1),
                True,
                reason,
            )
        )
    else:
        entries.append(
            BoundEntry(
                "perfect-clique-cover-log",
                None,
                False,
                "fires only for bipartite graphs or under an explicit perfection assertion",
            )
        )
    if iv.is_complete and n >= 2:
        entries.append(
            BoundEntry("complete-log", math.log2(n + 1), True, "random tournament argument")
        )
    else:
        entries.append(BoundEntry("complete-log", None, False, "complete graphs only, n >= 2"))
    return entries


# ---------------------------------------------------------------------------
# Transversal-reduction bounds: the k-swept trio and their closed forms.


def sweep_f(n: int, alpha: int, k: int) -> float:
    return 2 * n * math.log(k + 2) / (k + 2) + (2 * k + 1) * alpha


def sweep_g(n: int, alpha: int, k: int) -> float:
    return n * (k + 2) / (3 * k) + 2 * (2 * k + 1) * alpha / 3


def sweep_h(n: int, alpha: int, k: int) -> float:
    return n * (k + 1) / (3 * k - 1) + 2 * k * (2 * k + 1) * alpha / (3 * k - 1)


def closed_f(n: int, alpha: int) -> float:
    root = math.sqrt(2 * n * alpha)
    return root * (math.log(math.sqrt(2 * n / alpha)) + 2) - 2 * alpha


def closed_g(n: int, alpha: int) -> float:
    return (n + 2 * alpha + 4 * math.sqrt(2 * n * alpha)) / 3


def closed_h(n: int, alpha: int) -> float:
    num = math.sqrt(2 * alpha) * (27 * n + 20 * alpha)
    den = 3 * math.sqrt(5 * alpha + 6 * n)
    return (n + 14 * alpha / 3 + num / den) / 3


def transversal_upper_bounds(
    g: Graph, inputs: Optional[BoundsInputs] = None
) -> list[BoundEntry]:
    """Minimize f over all k, g over even k >= 2, h over odd k >= 1."""
    iv = inputs or compute_inputs(g)
    n, alpha = iv.n, iv.alpha
    if n < 1 or alpha < 1:
        return [
            BoundEntry(name, None, False, "needs n >= 1")
            for name in (
                "transversal-sweep-f",
                "transversal-sweep-g",
                "transversal-sweep-h",
                "transversal-closed-f",
                "transversal-closed-g",
                "transversal-closed-h",
            )
        ]
    k_max = n
    best_f = min(((sweep_f(n, alpha, k), k) for k in range(0, k_max + 1)))
    entries = [
        BoundEntry("transversal-sweep-f", best_f[0], True, "in-degree split plus shrunk cover", k=best_f[1])
    ]
    even_ks = range(2, k_max + 1, 2)
    best_g = min(((sweep_g(n, alpha, k), k) for k in even_ks), default=None)
    if best_g is not None:
        entries.append(
            BoundEntry("transversal-sweep-g", best_g[0], True, "even-k cover bound", k=best_g[1])
        )
    else:
        entries.append(BoundEntry("transversal-sweep-g", None, False, "no even k in range"))
    odd_ks = range(1, k_max + 1, 2)
    best_h = min(((sweep_h(n, alpha, k), k) for k in odd_ks), default=None)
    if best_h is not None:
        entries.append(
            BoundEntry("transversal-sweep-h", best_h[0], True, "odd-k cover bound", k=best_h[1])
        )
    else:
        entries.append(BoundEntry("transversal-sweep-h", None, False, "no odd k in range"))
    entries.append(
        BoundEntry("transversal-closed-f", closed_f(n, alpha), True, "closed form of the f sweep")
    )
    entries.append(
        BoundEntry("transversal-closed-g", closed_g(n, alpha), True, "closed form of the g sweep")
    )
    entries.append(
        BoundEntry("transversal-closed-h", closed_h(n, alpha), True, "closed form of the h sweep")
    )
    return entries


def r_domination_upper_bound(
    g: Graph, r: int, inputs: Optional[BoundsInputs] = None
) -> tuple[float, int]:
    """Minimum over k >= r of the r-domination cover expression."""
    if r < 1:
        raise ValueError("r must be at least 1")
    iv = inputs or compute_inputs(g)
    n, alpha = iv.n, iv.alpha
    best: Optional[tuple[float, int]] = None
    for k in range(r, max(n, r) + 1):
        val = (
            (2 * k - 1) * alpha
            + n * math.log(k + 1) / (k + 1)
            + r * n * (2 * math.log(k + 1)) ** r / (k + 1)
        )
        if best is None or val < best[0]:
            best = (val, k)
    assert best is not None
    return best


def sandwich(
    g: Graph,
    *,
    assert_perfect: bool = False,
    inputs: Optional[BoundsInputs] = None,
) -> BoundsReport:
    """Assemble all bounds into a certified integer interval."""
    iv = inputs or compute_inputs(g)
    lower = lower_bounds(g, iv)
    upper = upper_bounds(g, iv, assert_perfect=assert_perfect) + transversal_upper_bounds(g, iv)
    lows = [ceil_guarded(e.value) for e in lower if e.applicable]
    highs = [floor_guarded(e.value) for e in upper if e.applicable]
    lo = max(lows, default=0)
    hi = min(highs, default=0)
    lo = max(lo, 0)
    report = BoundsReport(tuple(lower), tuple(upper), (lo, hi), iv)
    if lo > hi:
        raise InternalInvariantViolation(
            f"bound sandwich inverted: lower {lo} > upper {hi}; inputs={iv!r}; "
            f"lower entries={lower!r}; upper entries={upper!r}"
        )
    return report


def best_upper_bound(
    g: Graph, inputs: Optional[BoundsInputs] = None
) -> tuple[int, str]:
    """Floor of the smallest applicable upper bound, with its name."""
    iv = inputs or compute_inputs(g)
    entries = upper_bounds(g, iv) + transversal_upper_bounds(g, iv)
    best_val: Optional[int] = None
    best_name = "order"
    for e in entries:
        if not e.applicable:
            continue
        v = floor_guarded(e.value)
        if best_val is None or v < best_val:
            best_val, best_name = v, e.name
    return (best_val if best_val is not None else g.n), best_name
