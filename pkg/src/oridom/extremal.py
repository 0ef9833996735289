"""Family-level extremal statistics and desk-scale conjecture tables.

Families are streams of graphs: internally enumerated triangulations,
committed regular-graph fixtures, or caller-supplied graph6 streams. The
running extremes skip any graph whose certified bounds cannot move them,
so exactness is preserved without solving every member.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from .bounds import best_upper_bound
from .errors import ParseError
from .graph import Graph, parse_graph6, to_graph6
from .invariants import independence_number
from .search import upper_directed_domination

OUTERPLANAR_CAP = 14
FIXTURES_ENV = "ORIDOM_FIXTURES"


@dataclass
class FamilyStats:
    family: str
    n: Optional[int]
    r: Optional[int]
    count: int
    min_gamma_d: Optional[int]
    max_gamma_d: Optional[int]
    argmin_graph6: Optional[str]
    argmax_graph6: Optional[str]
    min_exact: bool
    max_exact: bool
    notes: tuple[str, ...] = field(default_factory=tuple)


def enumerate_maximal_outerplanar(n: int) -> Iterator[Graph]:
    """All triangulations of a convex n-gon: outer cycle plus chords.

    Labeled enumeration, one graph per triangulation; the stream length is
    the (n-2)nd Catalan number. Duplicates up to isomorphism are fine for
    min/max statistics.
    """
    if not 3 <= n <= OUTERPLANAR_CAP:
        raise ParseError(f"triangulation enumeration needs 3 <= n <= {OUTERPLANAR_CAP}")

    def tri(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
        if hi - lo < 2:
            yield []
            return
        for mid in range(lo + 1, hi):
            for left in tri(lo, mid):
                for right in tri(mid, hi):
                    chords = left + right
                    if mid - lo > 1:
                        chords = chords + [(lo, mid)]
                    if hi - mid > 1:
                        chords = chords + [(mid, hi)]
                    yield chords

    cycle = [(i, (i + 1) % n) for i in range(n)]
    for chords in tri(0, n - 1):
        yield Graph(n, cycle + chords)


def family_stats(
    graphs: Iterable[Graph],
    *,
    family: str = "graph6-stream",
    n: Optional[int] = None,
    r: Optional[int] = None,
    predicate: Optional[Callable[[Graph], bool]] = None,
    want: str = "both",
    budget: Optional[int] = None,
    workers: int = 1,
    seed_max: Optional[tuple[int, str]] = None,
    notes: Iterable[str] = (),
) -> FamilyStats:
    """Running min/max of the exact directed domination number over a stream.

    A graph is solved exactly only when its certified bounds allow it to
    move a requested extremum; ``seed_max`` primes the running maximum with
    an already-certified (value, graph6) attainment from the same family.
    Budget overruns degrade to safe interval endpoints and clear the
    exactness flag.
    """
    if want not in ("min", "max", "both"):
        raise ParseError("want must be one of min, max, both")
    want_min = want in ("min", "both")
    want_max = want in ("max", "both")
    best_min: Optional[int] = None
    best_max: Optional[int] = None
    argmin: Optional[str] = None
    argmax: Optional[str] = None
    min_exact = True
    max_exact = True
    if seed_max is not None:
        best_max, argmax = seed_max[0], seed_max[1]
    count = 0
    for g in graphs:
        if predicate is not None and not predicate(g):
            continue
        count += 1
        need_min = want_min and (
            best_min is None or independence_number(g).value < best_min
        )
        need_max = want_max and (
            best_max is None or best_upper_bound(g)[0] > best_max
        )
        if not (need_min or need_max):
            continue
        res = upper_directed_domination(g, budget=budget, workers=workers)
        if res.exact:
            value = res.value
            if want_min and (best_min is None or value < best_min):
                best_min, argmin = value, to_graph6(g)
            if want_max and (best_max is None or value > best_max):
                best_max, argmax = value, to_graph6(g)
        else:
            lo, hi = res.interval
            if want_min and need_min:
                min_exact = False
                if best_min is None or hi < best_min:
                    best_min, argmin = hi, to_graph6(g)
            if want_max and need_max:
                max_exact = False
                if best_max is None or lo > best_max:
                    best_max, argmax = lo, to_graph6(g)
    return FamilyStats(
        family=family,
        n=n,
        r=r,
        count=count,
        min_gamma_d=best_min if want_min else None,
        max_gamma_d=best_max if want_max else None,
        argmin_graph6=argmin if want_min else None,
        argmax_graph6=argmax if want_max else None,
        min_exact=min_exact and want_min,
        max_exact=max_exact and want_max,
        notes=tuple(notes),
    )


def fixtures_dir(override: Optional[str] = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(FIXTURES_ENV)
    if env:
        return Path(env)
    return Path.cwd() / "fixtures"


def load_graph6_file(path: Path) -> list[Graph]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read graph6 file {path}: {exc}") from None
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def regular_family(
    n: int, r: int, fixtures: Optional[str] = None
) -> list[Graph]:
    """Committed fixture family of all r-regular graphs of order n."""
    path = fixtures_dir(fixtures) / "regular" / f"r{r}_n{n}.g6"
    if not path.exists():
        raise ParseError(
            f"missing fixture file {path} for (n={n}, r={r}); "
            f"set {FIXTURES_ENV} to the fixture directory"
        )
    graphs = load_graph6_file(path)
    for g in graphs:
        if g.n != n or any(g.degree(v) != r for v in range(n)):
            raise ParseError(f"fixture {path} contains a non {r}-regular graph")
    return graphs


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    r: int
    count: int
    min_gamma_d: int
    max_gamma_d: int
    half_n: Fraction
    eqm_upper: Fraction
    conjecture1_verdict: str  # "consistent" | "counterexample" | "n/a"
    eqm_bracket_holds: Optional[bool]
    question1_ratio: Fraction


def conjecture_report(
    max_n: int,
    *,
    max_r: int = 3,
    fixtures: Optional[str] = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> list[ConjectureRow]:
    """Per-(n, r) extremes over the regular fixture families with verdicts."""
    rows = []
    for r in range(1, max_r + 1):
        for n in range(r + 1, max_n + 1):
            if (n * r) % 2 != 0:
                continue
            graphs = regular_family(n, r, fixtures)
            stats = family_stats(
                graphs,
                family="r-regular",
                n=n,
                r=r,
                budget=budget,
                workers=workers,
            )
            assert stats.min_gamma_d is not None and stats.max_gamma_d is not None
            half = Fraction(n, 2)
            eqm_upper = Fraction((r + 2) * n, 2 * (r + 1))
            if r >= 3:
                verdict = "consistent" if stats.max_gamma_d == half else "counterexample"
            else:
                verdict = "n/a"
            bracket = (
                half <= stats.max_gamma_d <= eqm_upper if r >= 2 else None
            )
            rows.append(
                ConjectureRow(
                    n=n,
                    r=r,
                    count=stats.count,
                    min_gamma_d=stats.min_gamma_d,
                    max_gamma_d=stats.max_gamma_d,
                    half_n=half,
                    eqm_upper=eqm_upper,
                    conjecture1_verdict=verdict,
                    eqm_bracket_holds=bracket,
                    question1_ratio=Fraction(stats.min_gamma_d * (r + 1), n),
                )
            )
    return rows
