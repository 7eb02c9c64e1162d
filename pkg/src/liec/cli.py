"""Command-line interface.

Machine-first: every verb prints stable-keyed, newline-terminated JSON
(except generate, which writes edge-list text), so identical inputs give
byte-identical outputs.  Exit codes: 0 success, 1 domain "no" (not
colorable, failed verify, budget exceeded, bad input graph), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coloring import EdgeColoring, verify_liec
from .construct import ConstructionTrace, cactus_vdc_3liec, tree_liec, unicyclic_3liec
from .errors import LiecError, UnknownVertex
from .families import exhaustive_colorable, is_colorable, is_T_member, is_T_prime_member
from .generate import GenSpec, enumerate_connected_graphs, generate
from .graph import Graph, classify, connected_components, format_edge_list, parse_edge_list
from .solver import chromatic_index_irregular

_SLUGS = {
    "InTPrime": "in T-prime",
    "NotColorable": "not colorable",
}


def _slug(err: LiecError) -> str:
    name = type(err).__name__
    if name in _SLUGS:
        return _SLUGS[name]
    words = []
    for ch in name:
        if ch.isupper() and words:
            words.append(" ")
        words.append(ch.lower())
    return "".join(words)


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_edge_list(text)


def _labels(g: Graph):
    lab = g.labels or {}
    return lambda v: lab.get(v, v)


def _coloring_json(g: Graph, coloring: EdgeColoring) -> dict:
    lab = _labels(g)
    rows = []
    for u, v in sorted(coloring.assignment):
        a, b = lab(u), lab(v)
        if a > b:
            a, b = b, a
        rows.append([a, b, coloring.assignment[(u, v)]])
    rows.sort()
    return {"palette": coloring.palette_size, "edges": rows}


def _coloring_from_json(g: Graph, data: dict) -> EdgeColoring:
    lab = g.labels or {}
    to_dense = {orig: i for i, orig in lab.items()}
    assignment = {}
    for u, v, c in data["edges"]:
        if u not in to_dense or v not in to_dense:
            raise UnknownVertex(f"coloring references unknown vertex {u if u not in to_dense else v}")
        assignment[(to_dense[u], to_dense[v])] = c
    return EdgeColoring(assignment, data.get("palette"))


def _emit(obj, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    report = chromatic_index_irregular(g, k_max=args.kmax, budget=args.budget)
    out = {
        "chi": report.chi,
        "nodes_explored": report.nodes_explored,
        "witness": _coloring_json(g, report.witness) if report.witness else None,
    }
    _emit(out, args.pretty)
    return 0 if report.chi is not None else 1


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    with open(args.coloring, encoding="utf-8") as fh:
        data = json.load(fh)
    coloring = _coloring_from_json(g, data)
    bad = verify_liec(g, coloring)
    lab = _labels(g)
    out = {
        "ok": not bad,
        "violations": [sorted((lab(u), lab(v))) for u, v in bad],
    }
    _emit(out, args.pretty)
    return 0 if not bad else 1


def _construct_one(g: Graph, trace):
    tag = classify(g).tag
    if tag in ("EvenPath", "OddPath", "Tree"):
        return tree_liec(g, trace)
    if tag in ("EvenCycle", "OddCycle", "Unicyclic"):
        return unicyclic_3liec(g, trace)
    return cactus_vdc_3liec(g, trace)


def _cmd_construct(args) -> int:
    g = _read_graph(args.graph)
    trace = ConstructionTrace() if args.trace else None
    # connected pieces are independent: local irregularity never crosses them
    parts = []
    for comp in connected_components(g):
        if not comp.edges:
            continue
        parts.append(_construct_one(comp, trace))
    merged = {}
    palette = 1
    for coloring in parts:
        merged.update(coloring.assignment)
        palette = max(palette, coloring.palette_size)
    result = EdgeColoring(merged, palette)
    out = _coloring_json(g, result)
    if args.trace:
        lab = _labels(g)
        out["trace"] = [
            {
                "rule": step.rule,
                "detail": step.detail,
                "edges": sorted(
                    sorted([lab(u), lab(v)]) + [c] for (u, v), c in step.assignment.items()
                ),
            }
            for step in trace.steps
        ]
    _emit(out, args.pretty)
    return 0


def _cmd_recognize(args) -> int:
    g = _read_graph(args.graph)
    out = {
        "T": is_T_member(g) is not None,
        "T_PRIME": is_T_prime_member(g),
        "COLORABLE": is_colorable(g),
    }
    _emit(out, args.pretty)
    return 0


def _cmd_classify(args) -> int:
    g = _read_graph(args.graph)
    cls = classify(g)
    _emit({"tag": cls.tag, "girth": cls.girth, "cycle_count": cls.cycle_count}, args.pretty)
    return 0


def _cmd_generate(args) -> int:
    try:
        params = tuple(int(p) for p in args.params.split(",")) if args.params else ()
    except ValueError:
        print("error: --params must be comma-separated integers", file=sys.stderr)
        return 2
    if args.seed is not None:
        params = (args.seed, *params)
    g = generate(GenSpec(kind=args.kind, params=params))
    sys.stdout.write(format_edge_list(g))
    return 0


def _cmd_selftest(args) -> int:
    checked = 0
    failures = []
    for g in enumerate_connected_graphs(6):
        checked += 1
        expected = exhaustive_colorable(g, max_edges=6)
        if is_colorable(g) != expected:
            failures.append({"edges": sorted(g.edges), "kind": "recognizer"})
            continue
        report = chromatic_index_irregular(g, k_max=4, budget=6)
        if (report.chi is not None) != expected:
            failures.append({"edges": sorted(g.edges), "kind": "solver"})
    out = {"ok": not failures, "graphs_checked": checked, "failures": failures}
    _emit(out, args.pretty)
    return 0 if not failures else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liec",
        description="Decide, construct and verify locally irregular edge colorings.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")
        return p

    p = add("solve", _cmd_solve, "exact minimum color count by exhaustive search")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--kmax", type=int, default=5, help="largest color count to try")
    p.add_argument("--budget", type=int, default=20, help="edge-count cap for the search")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; the search is single-threaded")

    p = add("verify", _cmd_verify, "check a coloring file against a graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("coloring", help="coloring JSON file")

    p = add("construct", _cmd_construct, "build a coloring with at most 3 colors")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--trace", action="store_true", help="include the applied rules")

    p = add("recognize", _cmd_recognize, "membership in the non-colorable families")
    p.add_argument("graph", help="edge-list file, or - for stdin")

    p = add("classify", _cmd_classify, "structural class of the input graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")

    p = add("generate", _cmd_generate, "write a generated graph as edge-list text")
    p.add_argument("--kind", required=True)
    p.add_argument("--seed", type=int, default=None, help="seed for the random kinds")
    p.add_argument("--params", default="", help="comma-separated integer parameters")

    add("selftest", _cmd_selftest, "cross-check recognizer, oracle and solver")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LiecError as err:
        _emit({"error": _slug(err), "message": str(err)}, getattr(args, "pretty", False))
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as err:
        print(f"error: bad coloring JSON: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
