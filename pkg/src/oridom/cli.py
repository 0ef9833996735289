"""Command-line surface with stable machine-readable output.

Every JSON payload carries the tool version and the seed, so any run can be
replayed byte for byte. The human format is an indented rendering of the
same JSON object, never a separate computation path.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from . import __version__
from . import bounds as bounds_mod
from . import constructions as cons
from . import extremal
from .digraph import (
    Orientation,
    cinh,
    gamma_directed,
    gamma_r_directed,
    min_path_partition,
)
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    InternalInvariantViolation,
    OridomError,
    ParseError,
)
from .graph import (
    Graph,
    parse_arc_list,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .hypergraph import (
    Hypergraph,
    parse_hypergraph,
    r_transversal_number,
    randomized_r_transversal,
    transversal_number,
)
from .invariants import (
    chromatic_number,
    clique_number,
    domination_number,
    edge_chromatic_number,
    independence_number,
    matching_number,
    max_average_degree,
    vertex_cover_number,
)
from .search import (
    hakimi_orientation,
    lower_directed_domination,
    upper_directed_domination,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 5

CONSTRUCT_NAMES = (
    "independent-orientation",
    "dominating-orientation",
    "outerplanar",
    "hakimi",
    "rkt",
    "rk3-sk1",
    "kbar-kk",
    "random-tournament",
    "qr-tournament",
)


def jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "infinity"
        return value
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def graph_payload(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "graph6": to_graph6(g)}


def orientation_payload(d: Orientation) -> dict:
    return {
        "graph": graph_payload(d.base),
        "arcs": [list(a) for a in d.arcs()],
    }


def certificate_payload(cert: cons.Certificate) -> dict:
    return {
        "orientation": orientation_payload(cert.orientation),
        "claimed_gamma": cert.claimed_gamma,
        "dds_witness": list(cert.dds_witness),
        "claim_kind": cert.claim_kind,
    }


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read input {path}: {exc}") from None


def load_graph(args: argparse.Namespace) -> Graph:
    text = read_input(args.input)
    if args.format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError("expected exactly one graph6 line")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def load_orientation(args: argparse.Namespace) -> Orientation:
    if args.format == "graph6":
        raise ParseError("orientations need the arc-list edgelist format")
    n, arcs = parse_arc_list(read_input(args.input))
    base = Graph(n, arcs)
    return Orientation.from_arcs(base, arcs)


def load_hypergraph(args: argparse.Namespace) -> Hypergraph:
    return parse_hypergraph(read_input(args.input))


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (payload dict, exit code)


def cmd_invariants(args) -> tuple[dict, int]:
    g = load_graph(args)
    chi_prime, class_one = edge_chromatic_number(g)
    values = {}
    for inv in (
        independence_number(g),
        clique_number(g),
        domination_number(g),
        matching_number(g),
        vertex_cover_number(g),
        chromatic_number(g),
    ):
        values[inv.name] = {"value": inv.value, "witness": inv.witness}
    values[chi_prime.name] = {
        "value": chi_prime.value,
        "witness": chi_prime.witness,
        "class_one": class_one,
    }
    mad = max_average_degree(g) if g.n else None
    if mad is not None:
        values[mad.name] = {"value": mad.value, "witness": mad.witness}
    return {"graph": graph_payload(g), "invariants": values}, EXIT_OK


def cmd_gamma(args) -> tuple[dict, int]:
    g = load_graph(args)
    inv = domination_number(g)
    return {
        "graph": graph_payload(g),
        "gamma": inv.value,
        "witness": list(inv.witness),
    }, EXIT_OK


def cmd_gamma_directed(args) -> tuple[dict, int]:
    d = load_orientation(args)
    if args.r is not None and args.r != 1:
        value, witness = gamma_r_directed(d, args.r)
        key = "gamma_r_directed"
    else:
        value, witness = gamma_directed(d)
        key = "gamma_directed"
    return {
        "orientation": orientation_payload(d),
        "r": args.r if args.r is not None else 1,
        key: value,
        "witness": list(witness),
    }, EXIT_OK


def cmd_gamma_d_exact(args) -> tuple[dict, int]:
    g = load_graph(args)
    res = upper_directed_domination(g, budget=args.budget, workers=args.workers)
    payload = {
        "graph": graph_payload(g),
        "gamma_d_upper": res.value,
        "exact": res.exact,
        "interval": list(res.interval),
        "closing_bound": res.closing_bound,
        "witness": certificate_payload(res.certificate) if res.certificate else None,
    }
    return payload, EXIT_OK if res.exact else EXIT_BUDGET


def cmd_gamma_d_lower(args) -> tuple[dict, int]:
    g = load_graph(args)
    res = lower_directed_domination(g, verify_exhaustively=args.exhaustive)
    return {
        "graph": graph_payload(g),
        "gamma_d_lower": res.value,
        "verified_exhaustively": res.verified_exhaustively,
        "witness": certificate_payload(res.certificate) if res.certificate else None,
    }, EXIT_OK


def cmd_bounds(args) -> tuple[dict, int]:
    g = load_graph(args)
    report = bounds_mod.sandwich(g, assert_perfect=args.assert_perfect)
    iv = report.inputs
    payload = {
        "graph": graph_payload(g),
        "lower": [
            {"name": e.name, "value": e.value, "why": e.note, "applicable": e.applicable, "k": e.k}
            for e in report.lower
        ],
        "upper": [
            {"name": e.name, "value": e.value, "why": e.note, "applicable": e.applicable, "k": e.k}
            for e in report.upper
        ],
        "sandwich": list(report.sandwich),
        "inputs": {
            "n": iv.n,
            "m": iv.m,
            "alpha": iv.alpha,
            "alpha_prime": iv.alpha_prime,
            "gamma": iv.gamma,
            "chi": iv.chi,
            "chi_prime": iv.chi_prime,
            "chi_complement": iv.chi_complement,
            "delta": iv.delta,
            "max_degree": iv.max_degree,
            "diameter": iv.diameter,
            "mad": iv.mad,
            "regular_r": iv.regular_r,
            "is_bipartite": iv.is_bipartite,
            "is_connected": iv.is_connected,
            "is_complete": iv.is_complete,
            "class_one": iv.class_one,
        },
    }
    return payload, EXIT_OK


def cmd_construct(args) -> tuple[dict, int]:
    name = args.name
    if name in ("independent-orientation", "dominating-orientation"):
        g = load_graph(args)
        cert = (
            cons.independent_set_orientation(g)
            if name == "independent-orientation"
            else cons.dominating_set_orientation(g)
        )
    elif name == "outerplanar":
        require(args.n is not None, "--n is required for outerplanar")
        cert = cons.outerplanar_extremal(args.n)
    elif name == "hakimi":
        g = load_graph(args)
        d = hakimi_orientation(g)
        payload = {
            "construction": name,
            "orientation": orientation_payload(d),
            "max_out_degree": d.max_out_degree(),
        }
        return payload, EXIT_OK
    elif name == "rkt":
        require(args.r is not None and args.k is not None, "rkt needs --r and --k")
        g = cons.tightness_family("rkt", r=args.r, t=args.k)
        return {"construction": name, "graph": graph_payload(g)}, EXIT_OK
    elif name == "rk3-sk1":
        require(args.r is not None and args.k is not None, "rk3-sk1 needs --r and --k")
        g = cons.tightness_family("rk3-sk1", r=args.r, s=args.k)
        return {"construction": name, "graph": graph_payload(g)}, EXIT_OK
    elif name == "kbar-kk":
        require(args.n is not None and args.k is not None, "kbar-kk needs --n and --k")
        g = cons.tightness_family("kbar-kk", n=args.n, k=args.k)
        return {"construction": name, "graph": graph_payload(g)}, EXIT_OK
    elif name == "random-tournament":
        require(args.n is not None, "--n is required for random-tournament")
        d = cons.random_tournament(args.n, args.seed)
        return {"construction": name, "orientation": orientation_payload(d)}, EXIT_OK
    elif name == "qr-tournament":
        require(args.n is not None, "--n is required for qr-tournament")
        d = cons.quadratic_residue_tournament(args.n)
        return {"construction": name, "orientation": orientation_payload(d)}, EXIT_OK
    else:
        raise ParseError(f"unknown construction {name!r}")
    payload = {"construction": name, "certificate": certificate_payload(cert)}
    if args.verify:
        payload["verified"] = cons.verify_certificate(cert, exact=True)
    return payload, EXIT_OK


def require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


class UsageError(Exception):
    pass


def cmd_transversal(args) -> tuple[dict, int]:
    h = load_hypergraph(args)
    res = transversal_number(h, budget=args.budget)
    return {
        "hypergraph": {"n": h.n, "m": h.m},
        "tau": res.size,
        "transversal": list(res.vertices),
        "r": 1,
        "mode": res.mode,
    }, EXIT_OK


def cmd_r_transversal(args) -> tuple[dict, int]:
    require(args.r is not None, "--r is required")
    h = load_hypergraph(args)
    res = r_transversal_number(h, args.r, budget=args.budget)
    return {
        "hypergraph": {"n": h.n, "m": h.m},
        "tau_r": res.size,
        "transversal": list(res.vertices),
        "r": args.r,
        "mode": res.mode,
    }, EXIT_OK


def cmd_randomized_transversal(args) -> tuple[dict, int]:
    require(args.r is not None, "--r is required")
    h = load_hypergraph(args)
    res = randomized_r_transversal(h, args.r, args.seed)
    return {
        "hypergraph": {"n": h.n, "m": h.m, "k": h.uniform_k()},
        "size": res.size,
        "transversal": list(res.vertices),
        "r": args.r,
        "mode": res.mode,
    }, EXIT_OK


def cmd_tournament_check(args) -> tuple[dict, int]:
    require(args.k is not None, "--k is required")
    d = load_orientation(args)
    holds, witness = cons.k_domination_property(d, args.k)
    return {
        "n": d.n,
        "k": args.k,
        "holds": holds,
        "failing_set": list(witness) if witness else None,
    }, EXIT_OK


def cmd_path_partition(args) -> tuple[dict, int]:
    d = load_orientation(args)
    paths = min_path_partition(d)
    return {
        "orientation": orientation_payload(d),
        "paths": paths,
        "count": len(paths),
    }, EXIT_OK


def cmd_family_stats(args) -> tuple[dict, int]:
    notes: list[str] = []
    if args.family == "outerplanar":
        require(args.n is not None, "--n is required for the outerplanar family")
        stream = extremal.enumerate_maximal_outerplanar(args.n)
        stats = extremal.family_stats(
            stream,
            family="maximal-outerplanar",
            n=args.n,
            budget=args.budget,
            workers=args.workers,
        )
    elif args.family == "regular":
        require(
            args.n is not None and args.r is not None,
            "--n and --r are required for the regular family",
        )
        graphs = extremal.regular_family(args.n, args.r, args.fixtures)
        stats = extremal.family_stats(
            graphs,
            family="r-regular",
            n=args.n,
            r=args.r,
            budget=args.budget,
            workers=args.workers,
        )
    else:
        if args.family == "planar":
            notes.append("unvalidated family: planarity asserted by the caller")
        text = read_input(args.input)
        graphs = [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
        stats = extremal.family_stats(
            graphs,
            family=args.family,
            n=args.n,
            r=args.r,
            budget=args.budget,
            workers=args.workers,
            notes=notes,
        )
    payload = {
        "family": stats.family,
        "n": stats.n,
        "r": stats.r,
        "count": stats.count,
        "min_gamma_d": stats.min_gamma_d,
        "max_gamma_d": stats.max_gamma_d,
        "argmin_graph6": stats.argmin_graph6,
        "argmax_graph6": stats.argmax_graph6,
        "min_exact": stats.min_exact,
        "max_exact": stats.max_exact,
        "notes": list(stats.notes),
    }
    return payload, EXIT_OK


FAMILY_CSV_COLUMNS = (
    "family",
    "n",
    "r",
    "count",
    "min_gamma_d",
    "max_gamma_d",
    "argmin_graph6",
    "argmax_graph6",
    "min_exact",
    "max_exact",
)

CONJECTURE_CSV_COLUMNS = (
    "n",
    "r",
    "count",
    "min_gamma_d",
    "max_gamma_d",
    "half_n",
    "eqm_upper",
    "conjecture1_verdict",
    "eqm_bracket_holds",
    "question1_ratio",
)


def cmd_conjectures(args) -> tuple[dict, int]:
    require(args.n is not None, "--n (maximum order) is required")
    rows = extremal.conjecture_report(
        args.n,
        fixtures=args.fixtures,
        budget=args.budget,
        workers=args.workers,
    )
    return {
        "max_n": args.n,
        "rows": [
            {col: getattr(row, col) for col in CONJECTURE_CSV_COLUMNS}
            for row in rows
        ],
    }, EXIT_OK


HANDLERS = {
    "invariants": cmd_invariants,
    "gamma": cmd_gamma,
    "gamma-directed": cmd_gamma_directed,
    "gamma-d-exact": cmd_gamma_d_exact,
    "gamma-d-lower": cmd_gamma_d_lower,
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "transversal": cmd_transversal,
    "r-transversal": cmd_r_transversal,
    "randomized-transversal": cmd_randomized_transversal,
    "tournament-check": cmd_tournament_check,
    "path-partition": cmd_path_partition,
    "family-stats": cmd_family_stats,
    "conjectures": cmd_conjectures,
}

GRAPH_INPUT_COMMANDS = {
    "invariants",
    "gamma",
    "gamma-directed",
    "gamma-d-exact",
    "gamma-d-lower",
    "bounds",
    "transversal",
    "r-transversal",
    "randomized-transversal",
    "tournament-check",
    "path-partition",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oridom",
        description="Exact directed domination workbench for oriented graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_input: bool) -> None:
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="input path or - for stdin")
        p.add_argument(
            "--format",
            choices=("edgelist", "graph6", "hypergraph"),
            default="edgelist",
            help="input format",
        )
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument(
            "--output",
            choices=("json", "human", "csv"),
            default="json",
            help="output rendering",
        )
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--verify", action="store_true")
        p.add_argument("--assert-perfect", dest="assert_perfect", action="store_true")
        p.add_argument("--exhaustive", action="store_true")
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--r", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--fixtures", default=None, help="fixture directory override")

    for name in HANDLERS:
        p = sub.add_parser(name)
        if name == "construct":
            p.add_argument("name", choices=CONSTRUCT_NAMES)
            add_common(p, with_input=True)
        elif name == "family-stats":
            p.add_argument(
                "--family",
                choices=("graph6", "planar", "regular", "outerplanar"),
                default="graph6",
            )
            add_common(p, with_input=True)
        elif name == "conjectures":
            add_common(p, with_input=False)
        else:
            add_common(p, with_input=True)
    return parser


def render(payload: dict, args: argparse.Namespace) -> str:
    envelope = {
        "tool": "oridom",
        "version": __version__,
        "seed": args.seed,
        "command": args.command,
    }
    envelope.update(payload)
    body = jsonable(envelope)
    if args.output == "json":
        return json.dumps(body, separators=(",", ":")) + "\n"
    if args.output == "human":
        return json.dumps(body, indent=2) + "\n"
    # csv: family tables only
    if args.command == "family-stats":
        row = [str(jsonable(payload.get(c))) for c in FAMILY_CSV_COLUMNS]
        return ",".join(FAMILY_CSV_COLUMNS) + "\n" + ",".join(row) + "\n"
    if args.command == "conjectures":
        lines = [",".join(CONJECTURE_CSV_COLUMNS)]
        for row in payload["rows"]:
            lines.append(
                ",".join(str(jsonable(row[c])) for c in CONJECTURE_CSV_COLUMNS)
            )
        return "\n".join(lines) + "\n"
    raise UsageError("csv output is only available for family-stats and conjectures")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        handler = HANDLERS[args.command]
        payload, code = handler(args)
        text = render(payload, args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        text = json.dumps(
            jsonable(
                {
                    "tool": "oridom",
                    "version": __version__,
                    "seed": args.seed,
                    "command": args.command,
                    "infeasible": True,
                    "reason": str(exc),
                }
            ),
            separators=(",", ":"),
        ) + "\n"
        code = EXIT_OK
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
