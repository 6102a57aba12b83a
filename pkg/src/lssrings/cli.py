"""Command-line surface.

Graphs are given as a family spec ("star:3", "path:6", "cycle:4",
"complete:5", "complete_bipartite:2,3", "gapped:4", "example"), a
graph6 literal, or a path to a file holding either an edge list
("n" header then "i j" lines) or graph6 lines.

Exit codes: 0 success (findings included), 1 argument or input error,
2 desk-scale guard tripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graphs import (Graph, GraphFormatError, alpha, degeneracy, encode_graph6,
                     family, is_bipartite, max_degree, parse_edge_list,
                     parse_graph6)
from .groebner import DeskScaleExceeded
from .pmd import pmd, verify_decomposition
from .poly import (initial_form, lss_generators, pairwise_coprime_squarefree,
                   ring_for, weight_from_pmd)
from .reports import (invariants_of, properties_at, threshold_table,
                      verify_D_nonzero, verify_path_suite, verify_star_suite)
from .scan import (check_forest_pmd, enumerate_trees, iter_corpus_lines,
                   rows_to_csv, scan_corpus)

EXAMPLE_GRAPH = "4\n1 2\n2 3\n2 4\n3 4"


def load_graph(spec: str) -> Graph:
    if spec == "example":
        return parse_edge_list(EXAMPLE_GRAPH)
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
        stripped = [l for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
        if stripped and stripped[0].strip().isdigit():
            return parse_edge_list(text)
        if not stripped:
            raise GraphFormatError(f"{spec}: empty graph file")
        return parse_graph6(stripped[0])
    if ":" in spec:
        kind, _, rest = spec.partition(":")
        params = [int(x) for x in rest.split(",") if x]
        return family(kind, *params)
    return parse_graph6(spec)


def cmd_invariants(args) -> int:
    g = load_graph(args.graph)
    k, order = degeneracy(g)
    data = {
        "graph6": encode_graph6(g), "n": g.n, "m": g.m,
        "bipartite": is_bipartite(g), "delta": max_degree(g), "k": k,
        "alpha": alpha(g), "elimination_order": list(order.order),
    }
    if args.json:
        print(json.dumps(data))
    else:
        for key, val in data.items():
            print(f"{key}: {val}")
    return 0


def cmd_pmd(args) -> int:
    g = load_graph(args.graph)
    res = pmd(g, node_budget=args.budget)
    if args.certificate:
        print(json.dumps(res.to_json()))
    else:
        print(f"pmd = {res.value} ({res.status})")
        for l, part in enumerate(res.decomposition.parts, start=1):
            print(f"  part {l}: {sorted(part)}")
    return 0


def cmd_thresholds(args) -> int:
    g = load_graph(args.graph)
    inv = invariants_of(g, node_budget=args.budget)
    report = properties_at(g, args.d, inv)
    if args.json:
        print(json.dumps(report.to_json()))
        return 0
    print(f"n={g.n} m={g.m} delta={inv.delta} k={inv.k} alpha={inv.alpha} "
          f"pmd={inv.pmd_value} ({inv.pmd_status}) at d={args.d}")
    table = threshold_table(g, inv)
    for prop, verdict in report.verdicts.items():
        mark = "guaranteed" if verdict.guaranteed else "unknown"
        print(f"{prop:22s} {mark}")
        for rf in table[prop]:
            state = "fires" if args.d >= rf.threshold else "needs"
            print(f"    [{rf.rule}] d >= {rf.threshold} ({state}) :: {rf.statement}")
    return 0


def cmd_verify(args) -> int:
    ok = True
    if args.target == "star":
        suite = verify_star_suite(args.n or 3)
        ok = _print_suite(suite, args.json)
    elif args.target == "path":
        suite = verify_path_suite(args.n or 4)
        ok = _print_suite(suite, args.json)
    elif args.target == "D":
        from .graphs import path as path_graph, star as star_graph
        checks = [
            ("path on 3, remove vertex 3, d=2", verify_D_nonzero(path_graph(3), 3, 2)),
            ("2-leaf star, remove center, d=2", verify_D_nonzero(star_graph(2), 3, 2)),
        ]
        for name, passed in checks:
            ok &= passed
            print(f"{'PASS' if passed else 'FAIL'} determinant nonzero: {name}")
    elif args.target == "example":
        ok = _verify_example()
    return 0 if ok else 1


def _print_suite(suite, as_json: bool) -> bool:
    if as_json:
        print(json.dumps(suite.to_json()))
    else:
        for c in suite.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            print(line)
        print(f"{'PASS' if suite.passed else 'FAIL'} {suite.name}")
    return suite.passed


def _verify_example() -> bool:
    """End-to-end run of the worked four-vertex example."""
    g = load_graph("example")
    res = pmd(g)
    ok = res.value == 3 and res.status == "exact"
    print(f"{'PASS' if ok else 'FAIL'} pmd(example) = {res.value} (expect 3)")
    ok &= verify_decomposition(g, res.decomposition)
    d = 3
    ring = ring_for(g.n, d)
    wv = weight_from_pmd(res.decomposition, d)
    monos = []
    for (edge, f) in lss_generators(g, d, ring):
        ini = initial_form(f, wv)
        monos.append(next(iter(ini.terms)))
        print(f"  leading form of edge {edge}: {ini}")
        if len(ini) != 1:
            ok = False
    coprime = pairwise_coprime_squarefree(monos)
    ok &= coprime
    print(f"{'PASS' if coprime else 'FAIL'} leading monomials pairwise coprime and squarefree")
    return ok


def cmd_scan(args) -> int:
    try:
        with open(args.corpus, encoding="utf-8") as fh:
            lines = list(iter_corpus_lines(fh.read()))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rows, summary = scan_corpus(
        lines, node_budget=args.budget, jobs=args.jobs, max_n=args.max_n,
        stable_ms=args.stable)
    if args.json_out:
        print(json.dumps({"rows": [r.to_json() for r in rows],
                          "summary": summary.to_json()}))
    elif args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(rows_to_csv(rows))
    else:
        print(rows_to_csv(rows), end="")
    for r in rows:
        if r.ok_conjecture is False:
            print(f"FINDING: pmd > alpha on {r.id} (pmd={r.pmd}, alpha={r.alpha})",
                  file=sys.stderr)
    print(f"scanned {summary.total} graphs: {summary.exact} exact, "
          f"{summary.budget_exhausted} budget-exhausted, "
          f"{summary.parse_errors} parse errors, "
          f"{summary.violations} conjecture findings", file=sys.stderr)
    return 0


def cmd_trees(args) -> int:
    if args.check:
        summary = check_forest_pmd(args.n, node_budget=args.budget)
        print(f"checked {summary['checked']} trees up to n={args.n}")
        if not summary["ok"]:
            for f in summary["failures"]:
                print(f"FAIL pmd != delta: {f}", file=sys.stderr)
            return 1
        print("PASS pmd = delta on every tree")
        return 0
    for g in enumerate_trees(args.n):
        print(encode_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lssrings",
                                description="positive matching decompositions "
                                            "and the ring invariants they control")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", help="degree, degeneracy, alpha")
    sp.add_argument("graph")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("pmd", help="exact pmd with certificates")
    sp.add_argument("graph")
    sp.add_argument("--certificate", action="store_true")
    sp.add_argument("--budget", type=int, default=None, help="node budget")
    sp.set_defaults(func=cmd_pmd)

    sp = sub.add_parser("thresholds", help="property report at a given d")
    sp.add_argument("graph")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_thresholds)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("target", choices=["star", "path", "D", "example"])
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="scan a graph6 corpus")
    sp.add_argument("corpus")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=None)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--csv", dest="output", default=None,
                     help="write CSV rows to a file (default: CSV to stdout)")
    fmt.add_argument("--json", dest="json_out", action="store_true",
                     help="emit a JSON document instead of CSV")
    sp.add_argument("--stable", action="store_true",
                    help="zero the ms column for byte-reproducible output")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("trees", help="enumerate labeled trees as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--check", action="store_true",
                    help="assert pmd = degree on every tree")
    sp.add_argument("--budget", type=int, default=None)
    sp.set_defaults(func=cmd_trees)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DeskScaleExceeded as exc:
        print(f"desk-scale guard: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
