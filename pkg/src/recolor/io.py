"""Serialization: JSON documents with a ``kind`` field, graph6 lines, DOT output."""

from __future__ import annotations

import json

import networkx as nx

from .graph import SimpleGraph


class FormatError(ValueError):
    """Input text is neither a recognised JSON document nor a graph6 line."""


def graph_to_json(g: SimpleGraph, **extra) -> dict:
    doc = {"kind": "graph", "n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.names is not None:
        doc["names"] = list(g.names)
    doc.update(extra)
    return doc


def graph_from_json(doc: dict) -> SimpleGraph:
    try:
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed graph document: {exc}") from None
    try:
        return SimpleGraph.from_edges(n, edges, doc.get("names"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def to_graph6(g: SimpleGraph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def from_graph6(line: str) -> SimpleGraph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(line.encode())
    except Exception as exc:  # networkx raises several types here
        raise FormatError(f"bad graph6 line {line!r}: {exc}") from None
    return SimpleGraph.from_edges(h.number_of_nodes(), h.edges())


def read_graph6_file(path) -> list[SimpleGraph]:
    with open(path) as fh:
        return [from_graph6(ln) for ln in fh if ln.strip()]


def parse_document(text: str):
    """Return a JSON dict, or a graph document synthesised from a graph6 line."""
    text = text.strip()
    if not text:
        raise FormatError("empty input")
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or "kind" not in doc:
            raise FormatError("JSON input must be an object with a 'kind' field")
        return doc
    return graph_to_json(from_graph6(text.splitlines()[0]))


def _dot_id(v, names):
    return f'"{names[v]}"' if names else str(v)


def to_dot(g: SimpleGraph, highlight=(), edge_labels=None, node_labels=None, name="G") -> str:
    """Undirected DOT text; ``highlight`` vertices are drawn filled red."""
    hl = set(highlight)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = []
        if node_labels is not None:
            attrs.append(f'label="{node_labels[v]}"')
        if v in hl:
            attrs.append('style=filled, fillcolor="#e06060"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.sorted_edges():
        lab = edge_labels.get((u, v)) if edge_labels else None
        lines.append(f"  {u} -- {v}" + (f' [label="{lab}"]' if lab is not None else "") + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
