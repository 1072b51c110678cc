"""Command-line interface.

Exit codes: 0 success, 1 the property is false (labeling fails, search
finds nothing, labeling provably impossible), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .constructions import (
    ConstructionOutcome,
    Unsupported,
    construct_tworeg,
    theta_general,
    uni_cycle,
)
from .fixtures import FixtureError, write_fixtures
from .graph import (
    CycleOrientation,
    build_oriented_cycle,
    build_theta_cycle,
    build_unidirectional_cycle,
)
from .io import (
    FormatError,
    dump_json,
    read_graph,
    read_labeling,
    read_spec,
    to_dot,
    verdict_to_dict,
    weights_csv,
    write_graph,
    write_labeling,
)
from .labeling import DistanceSet, weigh
from .search import (
    SWEEP_COLUMNS,
    CharacterizationMismatch,
    SearchBudget,
    Status,
    backtrack,
    exhaustive,
    parallel_backtrack,
    sweep_pairs,
    sweep_singleton,
    thread_count,
)

OK, FALSE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _distance_set(text: str) -> DistanceSet:
    try:
        return DistanceSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(report, f, out_dir: Path | None) -> None:
    for v, (label, w) in enumerate(zip(f.values, report.weights), start=1):
        print(f"v_{v}\tlabel={label}\tweight={w}")
    if report.antimagic:
        print(f"antimagic: true ({report.d_set})")
    else:
        a, b = report.witness
        print(f"antimagic: false ({report.d_set}); v_{a + 1} and v_{b + 1} share weight {report.weights[a]}")
    if out_dir is not None:
        (out_dir / "weights.csv").write_text(weights_csv(f, report))
        (out_dir / "verdict.json").write_text(dump_json(verdict_to_dict(report)))


# --- construct ------------------------------------------------------------


def _construct(args) -> ConstructionOutcome:
    if args.family == "uni":
        if args.n is None:
            raise UsageError("--n is required for --family uni")
        return uni_cycle(args.n, args.d)
    if args.family == "theta":
        if args.n is None:
            raise UsageError("--n is required for --family theta")
        return theta_general(args.n, args.d)
    if args.spec is None:
        raise UsageError("--spec is required for --family tworeg")
    return construct_tworeg(read_spec(args.spec), args.d)


def cmd_construct(args) -> int:
    outcome = _construct(args)
    if not outcome.ok:
        print(f"no labeling: {outcome.reason}", file=sys.stderr)
        if outcome.unsupported is Unsupported.KNOWN_NONEXISTENT:
            return FALSE
        if outcome.unsupported is Unsupported.NOT_COVERED:
            print("not covered by any construction; try `dantimagic search`", file=sys.stderr)
        return USAGE
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    g, f = outcome.graph, outcome.labeling
    write_graph(g, out / "graph.json")
    write_labeling(f, out / "labeling.json")
    if args.emit == "dot":
        (out / "graph.dot").write_text(to_dot(g, f))
    if outcome.reason:
        print(f"construction: {outcome.reason}")
    report = weigh(g, None, f, args.d)
    _emit(report, f, out)
    return OK if report.antimagic else FALSE


# --- verify ---------------------------------------------------------------


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    f = read_labeling(args.labeling)
    if f.n != g.n:
        raise UsageError(f"labeling has {f.n} labels but the graph has {g.n} vertices")
    report = weigh(g, None, f, args.d)
    _emit(report, f, Path(args.out_dir) if args.out_dir else None)
    return OK if report.antimagic else FALSE


# --- search ---------------------------------------------------------------


def _search_graph(args):
    picked = [x is not None for x in (args.graph, args.family, args.bits)]
    if sum(picked) != 1:
        raise UsageError("give exactly one of --graph, --family, --bits")
    if args.graph:
        return read_graph(args.graph)
    if args.bits:
        return build_oriented_cycle(CycleOrientation.parse(args.bits))
    if args.n is None:
        raise UsageError("--n is required with --family")
    return (build_unidirectional_cycle if args.family == "uni" else build_theta_cycle)(args.n)


def cmd_search(args) -> int:
    g = _search_graph(args)
    budget = SearchBudget(args.budget_nodes, args.budget_ms)
    if args.method == "exhaustive":
        outcome = exhaustive(g, args.d, budget)
    elif thread_count() > 1:
        outcome = parallel_backtrack(g, args.d, budget, canonical=args.canonical)
    else:
        outcome = backtrack(g, args.d, budget)
    if outcome.status is Status.FOUND:
        print(f"found after {outcome.nodes} nodes: {' '.join(map(str, outcome.labeling.values))}")
        if args.out:
            write_labeling(outcome.labeling, args.out, d=list(args.d))
        return OK
    if outcome.status is Status.EXHAUSTED:
        print(f"no {args.d}-antimagic labeling exists ({outcome.nodes} nodes)")
    else:
        print(f"unknown: budget exhausted after {outcome.nodes} nodes")
    return FALSE


# --- sweep ----------------------------------------------------------------


def cmd_sweep(args) -> int:
    budget = SearchBudget(args.budget_nodes, args.budget_ms)
    status = OK
    if args.family == "singleton":
        try:
            rows = sweep_singleton(args.n_max, args.n_min, args.method or "exhaustive", budget)
        except CharacterizationMismatch as exc:
            rows, status = exc.rows, FALSE
            print(str(exc), file=sys.stderr)
    else:
        rows = sweep_pairs(
            args.n_max,
            args.orientations,
            args.n_min,
            args.method or "backtrack",
            budget,
            args.reduce_symmetry,
        )
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(out, SWEEP_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r.csv_row())
    finally:
        if args.out:
            out.close()
    unknown = sum(r.outcome.value == "Unknown" for r in rows)
    print(f"{len(rows)} rows, {unknown} unknown", file=sys.stderr)
    return status


# --- fixtures / export ----------------------------------------------------


def cmd_fixtures(args) -> int:
    try:
        paths = write_fixtures(args.out_dir, canonical=args.canonical)
    except FixtureError as exc:
        print(str(exc), file=sys.stderr)
        return FALSE
    for p in paths:
        print(p)
    return OK


def cmd_export_dot(args) -> int:
    g = read_graph(args.graph)
    f = read_labeling(args.labeling) if args.labeling else None
    if f is not None and f.n != g.n:
        raise UsageError(f"labeling has {f.n} labels but the graph has {g.n} vertices")
    text = to_dot(g, f)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dantimagic", description="Distance antimagic labelings of oriented cycles.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph and its explicit labeling")
    c.add_argument("--family", choices=["uni", "theta", "tworeg"], required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--d", type=_distance_set, required=True, help="ascending, comma-separated, e.g. 0,3")
    c.add_argument("--spec", help="JSON spec of a 2-regular graph (for --family tworeg)")
    c.add_argument("--out-dir", default=".")
    c.add_argument("--emit", choices=["dot"])
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a labeling on a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--labeling", required=True)
    v.add_argument("--d", type=_distance_set, required=True)
    v.add_argument("--out-dir", help="also write weights.csv and verdict.json here")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search for a labeling")
    s.add_argument("--graph")
    s.add_argument("--family", choices=["uni", "theta"])
    s.add_argument("--n", type=int)
    s.add_argument("--bits", help="cycle orientation such as TTFT")
    s.add_argument("--d", type=_distance_set, required=True)
    s.add_argument("--method", choices=["exhaustive", "backtrack"], default="backtrack")
    s.add_argument("--budget-nodes", type=int, default=SearchBudget().max_nodes)
    s.add_argument("--budget-ms", type=int, default=SearchBudget().max_millis)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--canonical", action="store_true", help="lexicographically first witness")
    mode.add_argument("--any-witness", dest="canonical", action="store_false")
    s.add_argument("--out", help="write the labeling JSON here")
    s.set_defaults(func=cmd_search)

    w = sub.add_parser("sweep", help="existence tables over cycle orientations")
    w.add_argument("--family", choices=["singleton", "pairs"], required=True)
    w.add_argument("--n-max", type=int, required=True)
    w.add_argument("--n-min", type=int, default=3)
    w.add_argument("--orientations", choices=["all", "uni"], default="all")
    w.add_argument("--reduce-symmetry", action="store_true", help="one orientation per rotation/reflection class")
    w.add_argument("--method", choices=["exhaustive", "backtrack"])
    w.add_argument("--budget-nodes", type=int, default=SearchBudget().max_nodes)
    w.add_argument("--budget-ms", type=int, default=SearchBudget().max_millis)
    w.add_argument("--out", help="CSV path (default stdout)")
    w.set_defaults(func=cmd_sweep)

    fx = sub.add_parser("fixtures", help="regenerate search-derived labelings")
    fx.add_argument("--out-dir", default="fixtures")
    fx.add_argument("--canonical", action="store_true", help="serial search, byte-identical output")
    fx.set_defaults(func=cmd_fixtures)

    e = sub.add_parser("export-dot", help="write a graph as DOT")
    e.add_argument("--graph", required=True)
    e.add_argument("--labeling")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
