"""Command line entry point: gen / cgraph / reconstruct / partition / llg / verify.

Every JSON document carries a ``kind`` so stages can be piped together::

    recolor gen townhouse 2 | recolor cgraph --k 4 --strip 7 | recolor reconstruct
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census
from . import families as fam
from .coloring import (Coloring, build_coloring_graph, is_link_coloring, strip_labels,
                       strip_permutation)
from .errors import BudgetExceeded, PreconditionError, StructuralInconsistency
from .graph import chromatic_number
from .io import FormatError, graph_from_json, graph_to_json, parse_document, to_dot, to_graph6
from .link import LinkReport, algorithm1
from .llg import algorithm3
from .partition import PartitionCache

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_STRUCTURE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read_input(args) -> dict:
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return parse_document(text)


def _write(args, payload):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_doc(doc: dict):
    if doc["kind"] in ("graph", "coloring-graph"):
        return graph_from_json(doc)
    raise UsageError(f"expected a graph document, got kind={doc['kind']!r}")


def _report_and_graph(args):
    """(coloring graph, link report) from stdin/--in, optionally with --report FILE."""
    doc = _read_input(args)
    if doc["kind"] == "link-report":
        if "input" not in doc:
            raise UsageError("link-report document has no embedded input graph")
        return graph_from_json(doc["input"]), LinkReport.from_json(doc)
    c = _graph_doc(doc)
    if args.report:
        with open(args.report) as fh:
            rdoc = json.load(fh)
        if rdoc.get("kind") == "abort":
            raise UsageError("the supplied report is an abort; there are no link vertices")
        return c, LinkReport.from_json(rdoc)
    rep = algorithm1(c)
    if not rep.ok:
        raise UsageError(f"reconstruction aborted at step {rep.step} ({rep.stage}); no link vertices")
    return c, rep


def _pick_vertex(args, rep):
    v = rep.anchor if args.vertex is None else args.vertex
    if v not in rep.A:
        raise UsageError(f"vertex {v} is not an abstract link vertex")
    return v


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args):
    if args.family == "named":
        if len(args.params) != 1:
            raise UsageError("gen named takes one graph name, e.g. C5, K2,3, TH3")
        g = fam.parse_name(args.params[0])
    else:
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise UsageError(f"parameters of {args.family} must be integers") from None
        g = fam.named(args.family, *params)
    if args.format == "graph6":
        _write(args, to_graph6(g) + "\n")
    elif args.format == "dot":
        _write(args, to_dot(g))
    else:
        _write(args, graph_to_json(g))
    return EXIT_OK


def cmd_cgraph(args):
    g = _graph_doc(_read_input(args))
    lcg = build_coloring_graph(g, args.k)
    n = lcg.skeleton.n
    links = []
    if g.n and args.k > chromatic_number(g):
        links = [i for i, col in enumerate(lcg.colorings) if is_link_coloring(g, Coloring(col, args.k))]
    if args.strip is not None:
        perm = strip_permutation(n, args.strip)
        skel = strip_labels(lcg, args.strip)
        if args.dot:
            _write(args, to_dot(skel, highlight=[perm[v] for v in links], name="C"))
        else:
            _write(args, graph_to_json(skel, strip_seed=args.strip))
        return EXIT_OK
    if args.dot:
        node_labels = ["".join(map(str, col)) for col in lcg.colorings]
        edge_labels = {e: str(lab) for e, lab in lcg.edge_labels.items()}
        _write(args, to_dot(lcg.skeleton, links, edge_labels, node_labels, name="C"))
        return EXIT_OK
    doc = graph_to_json(lcg.skeleton)
    doc.update(kind="coloring-graph", k=args.k, base=graph_to_json(g), link_vertices=links)
    if args.labels:
        doc["colorings"] = [list(col) for col in lcg.colorings]
        doc["edge_labels"] = [
            {"u": u, "v": v, "vertex": lab.vertex, "before": lab.before, "after": lab.after}
            for (u, v), lab in sorted(lcg.edge_labels.items())
        ]
    _write(args, doc)
    return EXIT_OK


def cmd_reconstruct(args):
    c = _graph_doc(_read_input(args))
    rep = algorithm1(c)
    doc = rep.to_json()
    if rep.ok:
        doc["input"] = graph_to_json(c)
        if not args.explain:
            doc.pop("per_alpha")
            doc.pop("input")
    _write(args, doc)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_partition(args):
    c, rep = _report_and_graph(args)
    v = _pick_vertex(args, rep)
    _write(args, PartitionCache(c, rep).partition(v).to_json())
    return EXIT_OK


def _llg_dot(llg):
    vs = sorted(llg.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    edge_labels = {}
    for (u, v), lab in llg.edges.items():
        edge_labels[(idx[u], idx[v])] = f"{lab.from_color} H{lab.part[0]}V{lab.part[1]} {lab.to_color}"
    return to_dot(llg.skeleton(), [idx[llg.anchor]], edge_labels, [str(v) for v in vs], name="L")


def cmd_llg(args):
    c, rep = _report_and_graph(args)
    v = _pick_vertex(args, rep)
    llg = algorithm3(c, rep, v, PartitionCache(c, rep))
    _write(args, _llg_dot(llg) if args.dot else llg.to_json())
    return EXIT_OK


def cmd_verify(args):
    report = census.run_suite(args.suite, jobs=args.jobs)
    _write(args, report)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="recolor", description="Coloring graphs and their reconstruction.")
    sub = p.add_subparsers(dest="command", required=True)

    def io_flags(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--in", dest="input", metavar="FILE", help="read input from FILE (default stdin)")
        sp.add_argument("--out", metavar="FILE", help="write output to FILE (default stdout)")

    sp = sub.add_parser("gen", help="emit a named graph")
    sp.add_argument("family", help="family name (" + ", ".join(sorted(fam.FAMILIES)) + ") or 'named'")
    sp.add_argument("params", nargs="*")
    sp.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    io_flags(sp, needs_input=False)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("cgraph", help="build the k-coloring graph of the input graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--labels", action="store_true", help="include colorings and edge labels")
    sp.add_argument("--strip", type=int, metavar="SEED", help="drop labels and shuffle ids with SEED")
    sp.add_argument("--dot", action="store_true")
    io_flags(sp)
    sp.set_defaults(func=cmd_cgraph)

    sp = sub.add_parser("reconstruct", help="recover (G, k) from an unlabeled coloring graph")
    sp.add_argument("--explain", action="store_true", help="include per-vertex profiles and the input")
    io_flags(sp)
    sp.set_defaults(func=cmd_reconstruct)

    for name, func, helptext in (
        ("partition", cmd_partition, "component-wise partition at a link vertex"),
        ("llg", cmd_llg, "labeled link graph of a link vertex's class"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--vertex", type=int, help="link vertex (default: the reconstruction anchor)")
        sp.add_argument("--report", metavar="FILE", help="link-report JSON for the input graph")
        if name == "llg":
            sp.add_argument("--dot", action="store_true")
        io_flags(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", help="run a census suite")
    sp.add_argument("--suite", choices=sorted(census.SUITES) + ["all"], default="all")
    sp.add_argument("--jobs", type=int, default=1)
    io_flags(sp, needs_input=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, PreconditionError, KeyError, ValueError) as exc:
        print(f"recolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"recolor: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except StructuralInconsistency as exc:
        print(f"recolor: structural inconsistency: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE


if __name__ == "__main__":
    sys.exit(main())
