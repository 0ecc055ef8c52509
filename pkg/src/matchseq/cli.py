"""Command-line interface.

Subcommands::

    construct  build a family ordering, report value=/predicted=, optionally
               render the biadjacency matrix view
    check      compute the matching number of an ordering file
    solve      exact decision / optimization for an arbitrary graph (JSON)
    verify     run the construction-vs-formula-vs-solver harness
    explore    experiment drivers q1 (edge multiplication), q2 (ms-cms gap),
               q3 (doubled graphs)

Exit codes: 0 success/pass, 1 verification failure, 2 input error,
3 budget exhaustion.  MATCHSEQ_THREADS caps the verify harness's process
fan-out (default 1, fully deterministic either way).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, constructions, graphs, orderings, solver
from .errors import MatchseqError, SearchBudgetExceeded

_FAMILY_ALIASES = {"bipartite": "complete_bipartite"}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="matchseq",
        description="Edge orderings whose consecutive windows form matchings.")
    sub = top.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a known-value family ordering")
    c.add_argument("--family", required=True,
                   choices=["complete", "bipartite", "complete_bipartite",
                            "cycle", "path", "circulant3", "doubled_complete"])
    c.add_argument("--params", required=True, type=int, nargs="+")
    c.add_argument("--mode", choices=list(orderings.MODES),
                   help="default: linear for bipartite, cyclic otherwise")
    c.add_argument("--matrix", action="store_true",
                   help="print the labeled biadjacency matrix (bipartite hosts)")
    c.add_argument("--out", help="write the ordering file here instead of stdout")
    c.add_argument("--graph-out", help="also write the graph's edge list here")

    k = sub.add_parser("check", help="matching number of an ordering file")
    k.add_argument("--graph", required=True)
    k.add_argument("--ordering", required=True)
    k.add_argument("--mode", required=True, choices=list(orderings.MODES))

    s = sub.add_parser("solve", help="exact solve for an arbitrary graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--mode", required=True, choices=list(orderings.MODES))
    s.add_argument("--target", type=int,
                   help="decide existence of an ordering with value >= target")
    s.add_argument("--budget-seconds", type=float, default=300.0)
    s.add_argument("--single-thread", action="store_true",
                   help="force sequential search (always on; kept for scripts)")

    v = sub.add_parser("verify", help="constructions vs formulas vs solver")
    v.add_argument("--max-complete", type=int, default=8)
    v.add_argument("--max-cycle", type=int, default=16)
    v.add_argument("--exact-up-to-edges", type=int, default=12)
    v.add_argument("--json-out", help="also write the JSON report here")

    e = sub.add_parser("explore", help="open-question experiment drivers")
    e.add_argument("question", choices=["q1", "q2", "q3"])
    e.add_argument("--graph", help="edge-list file (q1, q3)")
    e.add_argument("--k-max", type=int, default=2, help="q1: test kG for k <= k-max")
    e.add_argument("--max-n", type=int, default=5, help="q2: vertex bound")
    e.add_argument("--connected-only", action="store_true", help="q2 filter")
    e.add_argument("--budget-seconds", type=float, default=300.0)
    return top


def _read_graph(path: str) -> graphs.Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graphs.read_edge_list(fh.read())


def _cmd_construct(args) -> int:
    family = _FAMILY_ALIASES.get(args.family, args.family)
    mode = args.mode
    if mode is None:
        mode = orderings.LINEAR if family == "complete_bipartite" else orderings.CYCLIC
    if args.matrix and family == "doubled_complete":
        raise MatchseqError("doubled_complete has no biadjacency matrix view")
    ordering = constructions.family_ordering(family, tuple(args.params), mode)
    pred = catalog.predicted(family, mode, tuple(args.params))
    value = orderings.matching_number(ordering).value
    if args.matrix:
        spec = graphs.FamilySpec(family, tuple(args.params))
        rows, cols = constructions.biadjacency_layout(spec)
        sys.stdout.write(orderings.render_biadjacency(ordering, rows, cols))
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(graphs.write_edge_list(ordering.graph))
    line = orderings.write_ordering(ordering)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(line)
    else:
        sys.stdout.write(line)
    print(f"value={value} predicted={pred.value}")
    return 0 if value == pred.value else 1


def _cmd_check(args) -> int:
    g = _read_graph(args.graph)
    with open(args.ordering, "r", encoding="utf-8") as fh:
        ordering = orderings.read_ordering(fh.read(), g, args.mode)
    report = orderings.matching_number(ordering)
    print(f"value={report.value}")
    if report.violating_pair is None:
        print("violating_pair=none (the graph is a matching)")
    else:
        a, b, gap = report.violating_pair
        ea, eb = g.edges[a], g.edges[b]
        print(f"violating_pair=edge {a} {{{ea.u},{ea.v}}} at position "
              f"{ordering.position(a)}, edge {b} {{{eb.u},{eb.v}}} at position "
              f"{ordering.position(b)}, gap {gap}")
    return 0


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    budget = solver.SolveBudget(max_seconds=args.budget_seconds)
    if args.target is not None:
        result = solver.exists_ordering(g, args.target, args.mode, budget)
    elif args.mode == orderings.LINEAR:
        result = solver.ms_exact(g, budget)
    else:
        result = solver.cms_exact(g, budget)
    payload = result.summary_dict()
    payload["mode"] = args.mode
    payload["target"] = args.target
    payload["witness"] = (orderings.write_ordering(result.witness).strip()
                          if result.witness is not None else None)
    print(json.dumps(payload, indent=2))
    return 3 if result.status == solver.BUDGET_EXCEEDED else 0


def _cmd_verify(args) -> int:
    report = catalog.verify_families(max_complete=args.max_complete,
                                     max_cycle=args.max_cycle,
                                     exact_up_to_edges=args.exact_up_to_edges)
    sys.stdout.write(report.to_text())
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_obj(), fh, indent=2)
            fh.write("\n")
    return 0 if report.all_pass else 1


def _cmd_explore(args) -> int:
    budget = solver.SolveBudget(max_seconds=args.budget_seconds)
    if args.question in ("q1", "q3") and not args.graph:
        raise MatchseqError(f"{args.question} needs --graph")
    if args.question == "q1":
        result = catalog.explore_q1(_read_graph(args.graph), args.k_max, budget)
        print(f"matching number p = {result.matching_number}")
        print(f"{'k':>3} {'ms(kG)':>7} {'cms(kG)':>8} {'ms==p':>6} {'cms==p':>7}")
        for row in result.rows:
            print(f"{row.k:>3} {_cell(row.ms_value):>7} {_cell(row.cms_value):>8} "
                  f"{_cell(row.ms_reached):>6} {_cell(row.cms_reached):>7}")
    elif args.question == "q2":
        result = catalog.explore_q2(args.max_n, budget,
                                    connected_only=args.connected_only)
        print(f"graphs on <= {result.n_max} vertices: {len(result.rows)} classes"
              f"{' (PARTIAL: budget hit)' if result.partial else ''}")
        print(f"max ms-cms gap = {result.max_gap}")
        for row in result.witnesses:
            print(f"  gap {row.gap}: ms={row.ms_value} cms={row.cms_value} "
                  f"edges={list(row.edges)}")
    else:
        result = catalog.explore_q3(_read_graph(args.graph), budget)
        print(f"ms(G)   = {_cell(result.ms_single)}")
        print(f"cms(2G) = {_cell(result.cms_doubled)}")
        print(f"equal   = {_cell(result.equal)}")
    return 0


def _cell(x) -> str:
    return "?" if x is None else str(x)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "check": _cmd_check,
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "explore": _cmd_explore,
    }
    try:
        return handlers[args.command](args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MatchseqError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
