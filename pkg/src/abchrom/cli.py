"""abchrom command line: gen, check, invariants, heuristic, verify.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 graph/coloring
mismatch, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .coloring import Coloring, is_acyclic, is_proper
from .errors import BudgetExceeded, ColoringError, FamilyError, GraphError
from .exact import DEFAULT_PARTITION_BUDGET, exact_invariants, is_b_coloring
from .families import formula_ab, generate, parse_family_spec, reference_coloring
from .graphio import parse_coloring, parse_graph, serialize_graph, to_dot
from .recolor import STRATEGIES, is_minimal_by_definition, is_minimal_by_witnesses, run_recoloring_algorithm
from .witness import DEFAULT_SEARCH_BUDGET, witness_report

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3, 4


class Mismatch(Exception):
    pass


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        return "dimacs" if s[0] in "cp" else "edgelist"
    return "edgelist"


def load_input(args):
    """Graph, legend and optional family spec from exactly one source."""
    if (args.graph is None) == (args.family is None):
        raise GraphError("give exactly one of a graph file or --family")
    if args.family is not None:
        spec = parse_family_spec(args.family)
        g, legend = generate(spec)
        return g, legend, spec
    text = _read(args.graph)
    fmt = args.input_format or _detect_format(text)
    return parse_graph(text, fmt), {}, None


def _emit(obj, args):
    text = json.dumps(obj, indent=2, sort_keys=False)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _plot_dir(args) -> Path | None:
    if getattr(args, "plot", None):
        path = Path(args.plot)
        path.mkdir(parents=True, exist_ok=True)
        return path
    return None


def cmd_gen(args):
    spec = parse_family_spec(args.spec)
    g, legend = generate(spec)
    try:
        ref = reference_coloring(spec)
    except FamilyError:
        ref = None
    fmt = args.format
    if fmt == "json":
        try:
            ab = formula_ab(spec)
        except FamilyError:
            ab = None
        _emit({"spec": str(spec), "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges],
               "legend": legend, "reference_coloring": list(ref.colors) if ref else None,
               "formula_ab": list(ab) if isinstance(ab, tuple) else ab}, args)
    else:
        if fmt == "dot":
            labels = {i: name for name, i in legend.items()}
            text = to_dot(g, ref, labels)
        else:
            text = serialize_graph(g, fmt)
            if fmt == "dimacs":
                # legend as comment lines after the header-free preamble
                text = "".join(f"c {name} {i + 1}\n" for name, i in legend.items()) + text
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        if args.legend:
            Path(args.legend).write_text(json.dumps(legend, indent=2) + "\n")
    plots = _plot_dir(args)
    if plots is not None:
        from .plotting import draw_coloring

        labels = {i: name for name, i in legend.items()} if g.n <= 40 else None
        draw_coloring(g, ref, plots / f"{_slug(str(spec))}.png", labels=labels, title=str(spec))
    return EXIT_OK


def _slug(text):
    return "".join(ch if ch.isalnum() else "_" for ch in text).strip("_")


def cmd_check(args):
    g, legend, spec = load_input(args)
    if args.coloring == "reference":
        if spec is None:
            raise GraphError("'reference' coloring needs --family")
        c = reference_coloring(spec)
    else:
        c = parse_coloring(_read(args.coloring))
    if len(c) != g.n:
        raise Mismatch(f"coloring has {len(c)} entries, graph has {g.n} vertices")
    report = {"n": g.n, "k": c.k, "coloring": list(c.colors)}
    proper = is_proper(g, c)
    report["proper"] = proper
    report["acyclic"] = is_acyclic(g, c) if proper else False
    report["b_coloring"] = is_b_coloring(g, c) if proper else False
    if report["acyclic"]:
        report["witnesses"] = witness_report(g, c)
        d = is_minimal_by_definition(g, c, "acyclic", budget=args.budget_nodes)
        w = is_minimal_by_witnesses(g, c)
        report["minimal_by_definition"] = d
        report["minimal_by_witnesses"] = w
        report["minimal"] = d
        report["checkers_agree"] = d == w
    if legend:
        report["legend"] = legend
    _emit(report, args)
    plots = _plot_dir(args)
    if plots is not None:
        from .plotting import draw_coloring

        draw_coloring(g, c, plots / "coloring.png", title=f"k={c.k} acyclic={report['acyclic']}")
    return EXIT_OK


def cmd_invariants(args):
    g, legend, spec = load_input(args)
    rep = exact_invariants(g, budget=args.budget_nodes, search_budget=args.budget_nodes,
                           with_m_a=not args.no_m_a)
    out = rep.to_json()
    out["meta"]["threads"] = args.threads
    if spec is not None:
        out["spec"] = str(spec)
        try:
            ab = formula_ab(spec)
            out["formula_ab"] = list(ab) if isinstance(ab, tuple) else ab
        except FamilyError as exc:
            out["formula_ab"] = None
            out["formula_note"] = str(exc)
    _emit(out, args)
    plots = _plot_dir(args)
    if plots is not None:
        from .plotting import draw_coloring

        for key, c in rep.witnesses.items():
            draw_coloring(g, c, plots / f"witness_{key}.png", title=f"{key} = {c.k}")
    return EXIT_OK


def cmd_heuristic(args):
    g, legend, spec = load_input(args)
    strategies = list(STRATEGIES) if args.strategy == "all" else [args.strategy]
    runs = []
    for r in range(args.runs):
        seed = args.seed + r
        strategy = strategies[r % len(strategies)]
        trace: list = []
        c = run_recoloring_algorithm(g, variant=args.variant, strategy=strategy, seed=seed,
                                     random_choice=args.random_choice, budget=args.budget_nodes, trace=trace)
        runs.append({
            "seed": seed, "strategy": strategy, "k": c.k, "coloring": list(c.colors),
            "minimal": is_minimal_by_definition(g, c, args.variant, budget=args.budget_nodes),
            "trace": [{"removed_color": s.removed_color, "assignment_log": [list(x) for x in s.assignment_log]}
                      for s in trace],
        })
    counts = Counter(run["k"] for run in runs)
    summary = {"variant": args.variant, "runs": len(runs), "k_counts": {str(k): counts[k] for k in sorted(counts)},
               "all_minimal": all(run["minimal"] for run in runs)}
    bounds = {}
    if args.bounds:
        rep = exact_invariants(g, budget=args.budget_nodes, with_m_a=False)
        lo, hi = (rep.A, rep.A_b) if args.variant == "acyclic" else (rep.chi, rep.phi)
        names = ("A", "A_b") if args.variant == "acyclic" else ("chi", "phi")
        bounds = {names[0]: lo, names[1]: hi}
        summary["bounds"] = bounds
        summary["within_bounds"] = all(lo <= run["k"] <= hi for run in runs)
    out = {"summary": summary}
    if not args.summary_only:
        out["runs"] = runs
    _emit(out, args)
    plots = _plot_dir(args)
    if plots is not None:
        from .plotting import draw_heuristic_histogram

        draw_heuristic_histogram(dict(counts), bounds, plots / f"heuristic_{args.variant}.png")
    return EXIT_OK


def cmd_verify(args):
    from .verify import all_passed, run_suite

    rows = run_suite(args.suite)
    for row in rows:
        print(row.line())
    ok = all_passed(rows)
    print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'}")
    if args.output:
        Path(args.output).write_text(json.dumps([r.to_json() for r in rows], indent=2, default=str) + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def _input_args(p):
    p.add_argument("graph", nargs="?", help="graph file (edge list or DIMACS), '-' for stdin")
    p.add_argument("--family", help="family spec instead of a graph file, e.g. roof:2")
    p.add_argument("--input-format", choices=["edgelist", "dimacs"], help="default: detect")


def _common(p):
    p.add_argument("--budget-nodes", type=_positive, default=DEFAULT_SEARCH_BUDGET,
                   help="node budget for searches (default %(default)s)")
    p.add_argument("--threads", type=_positive, default=1,
                   help="accepted for interface stability; searches run in one thread")
    p.add_argument("--output", "-o", help="write JSON here instead of stdout")
    p.add_argument("--plot", metavar="DIR", help="also render figures into DIR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abchrom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=["edgelist", "dimacs", "json", "dot"], default="edgelist")
    p.add_argument("--legend", help="write the name -> vertex legend as JSON to this file")
    p.add_argument("--output", "-o")
    p.add_argument("--plot", metavar="DIR")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="inspect a coloring: acyclicity, witnesses, minimality")
    _input_args(p)
    p.add_argument("--coloring", required=True, help="coloring file, '-' for stdin, or 'reference'")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="exact chi, A, phi, A_b, omega, m, m_a")
    _input_args(p)
    p.add_argument("--no-m-a", action="store_true", help="skip the acyclic-degree bound")
    _common(p)
    p.set_defaults(func=cmd_invariants, budget_nodes=DEFAULT_PARTITION_BUDGET)

    p = sub.add_parser("heuristic", help="seeded runs of the (acyclic) recoloring algorithm")
    _input_args(p)
    p.add_argument("--variant", choices=["acyclic", "proper"], default="acyclic")
    p.add_argument("--strategy", choices=[*STRATEGIES, "all"], default="lowest")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=_positive, default=1)
    p.add_argument("--random-choice", action="store_true", help="random admissible color per vertex")
    p.add_argument("--bounds", action="store_true", help="also compute the exact bracketing invariants")
    p.add_argument("--summary-only", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--output", "-o", help="write the rows as JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Mismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ColoringError, FamilyError, KeyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
