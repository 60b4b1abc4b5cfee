"""Exact isomorphism testing and canonical certificates.

Both routes are built on the same colour refinement but search differently:

* :func:`graph_isomorphic` refines the disjoint union of the two graphs and
  backtracks on matched cells until it finds a witness bijection.
* :func:`canonical_certificate` runs individualization-refinement on each
  connected component, takes the smallest leaf encoding, and prunes children
  that lie in one orbit of the automorphisms discovered so far.

Neither depends on the other, so tests can cross-check them.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Sequence

from .errors import BudgetExceeded
from .graph import SimpleGraph, connected_components

DEFAULT_ISO_BUDGET = 10**7


def default_budget() -> int:
    return int(os.environ.get("RECOLOR_ISO_BUDGET", DEFAULT_ISO_BUDGET))


def refine(adj: Sequence, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered colouring.

    New colours are ranks of ``(old colour, sorted neighbour colours)``, so the
    result depends only on structure and the cell order of the input.
    """
    n = len(colors)
    ncells = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(n)]
        keys = sorted(set(sig))
        if len(keys) == ncells:
            return colors
        rank = {k: i for i, k in enumerate(keys)}
        colors = [rank[s] for s in sig]
        ncells = len(keys)


def _individualize(colors: list[int], cell: int, chosen: Sequence[int]) -> list[int]:
    out = [c + 1 if c > cell else c for c in colors]
    for v, c in enumerate(colors):
        if c == cell:
            out[v] = cell + 1
    for v in chosen:
        out[v] = cell
    return out


def _target_cell(colors: list[int], counts: Counter) -> int | None:
    """First smallest non-singleton cell; ``counts`` maps colour -> cell size."""
    best = None
    for c in sorted(counts):
        size = counts[c]
        if size > 1 and (best is None or size < counts[best]):
            best = c
    return best


# -- witness search ---------------------------------------------------------


def graph_isomorphic(a: SimpleGraph, b: SimpleGraph, budget: int | None = None) -> list[int] | None:
    """Return ``phi`` with ``phi[v]`` the image in ``b`` of vertex ``v`` of ``a``, or None."""
    budget = default_budget() if budget is None else budget
    n = a.n
    if n != b.n or a.m != b.m:
        return None
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return None
    if n == 0:
        return []
    adj = list(a.adj) + [frozenset(u + n for u in nb) for nb in b.adj]

    def balanced(colors):
        return Counter(colors[:n]) == Counter(colors[n:])

    def leaf(colors):
        where = {colors[v]: v for v in range(n, 2 * n)}
        phi = [where[colors[v]] - n for v in range(n)]
        if all(b.has_edge(phi[u], phi[v]) for u, v in a.edges):
            return phi
        return None

    colors = refine(adj, [0] * (2 * n))
    if not balanced(colors):
        return None
    if len(set(colors)) == n:
        return leaf(colors)

    def frame(colors):
        counts = Counter(colors[:n])
        cell = _target_cell(colors, counts)
        x = min(v for v in range(n) if colors[v] == cell)
        ys = iter([v for v in range(n, 2 * n) if colors[v] == cell])
        return colors, cell, x, ys

    nodes = 0
    stack = [frame(colors)]
    while stack:
        colors, cell, x, ys = stack[-1]
        y = next(ys, None)
        if y is None:
            stack.pop()
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("isomorphism search nodes", budget)
        child = refine(adj, _individualize(colors, cell, (x, y)))
        if not balanced(child):
            continue
        if len(set(child)) == n:
            phi = leaf(child)
            if phi is not None:
                return phi
            continue
        stack.append(frame(child))
    return None


def is_isomorphic(a: SimpleGraph, b: SimpleGraph, budget: int | None = None) -> bool:
    return graph_isomorphic(a, b, budget) is not None


# -- canonical form ----------------------------------------------------------


def _orbits(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            ru, rv = find(v), find(g[v])
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    return [find(v) for v in range(n)]


class _Counter:
    def __init__(self, budget):
        self.nodes = 0
        self.budget = budget

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("canonical labelling search nodes", self.budget)


def canonical_labelling(g: SimpleGraph, budget: int | None = None) -> tuple[tuple, list[int]]:
    """Return ``(code, lab)``: the canonical edge code and a labelling achieving it.

    ``lab[v]`` is the canonical position of ``v``; ``code`` is the sorted tuple of
    relabelled edges. Isomorphic graphs get equal codes.
    """
    counter = _Counter(default_budget() if budget is None else budget)
    n = g.n
    if n == 0:
        return (), []
    adj = g.adj
    edges = list(g.edges)

    def encode(lab):
        return tuple(sorted((lab[u], lab[v]) if lab[u] < lab[v] else (lab[v], lab[u]) for u, v in edges))

    first_lab = first_inv = None
    first_code = None
    best_code = best_lab = best_inv = None
    autos: list[list[int]] = []

    def visit_leaf(lab):
        nonlocal first_lab, first_inv, first_code, best_code, best_lab, best_inv
        code = encode(lab)
        if first_code is None:
            first_code, first_lab = code, lab
            first_inv = [0] * n
            for v, p in enumerate(lab):
                first_inv[p] = v
            best_code, best_lab, best_inv = code, lab, first_inv
            return
        if code == first_code:
            autos.append([first_inv[lab[v]] for v in range(n)])
        elif code == best_code:
            autos.append([best_inv[lab[v]] for v in range(n)])
        elif code < best_code:
            best_code, best_lab = code, lab
            best_inv = [0] * n
            for v, p in enumerate(lab):
                best_inv[p] = v

    def make_frame(colors, prefix):
        counts = Counter(colors)
        cell = _target_cell(colors, counts)
        children = [v for v in range(n) if colors[v] == cell]
        return {"colors": colors, "prefix": prefix, "cell": cell, "children": children,
                "i": 0, "done": [], "nauts": -1, "orb": None}

    colors = refine(adj, [0] * n)
    if len(set(colors)) == n:
        visit_leaf(colors)
        return best_code, best_lab
    stack = [make_frame(colors, ())]
    while stack:
        fr = stack[-1]
        if fr["i"] >= len(fr["children"]):
            stack.pop()
            continue
        w = fr["children"][fr["i"]]
        fr["i"] += 1
        if fr["done"]:
            if fr["nauts"] != len(autos):
                prefix = fr["prefix"]
                gens = [a for a in autos if all(a[p] == p for p in prefix)]
                fr["orb"] = _orbits(n, gens)
                fr["nauts"] = len(autos)
            orb = fr["orb"]
            if any(orb[w] == orb[u] for u in fr["done"]):
                continue
        fr["done"].append(w)
        counter.tick()
        child = refine(adj, _individualize(fr["colors"], fr["cell"], (w,)))
        if len(set(child)) == n:
            visit_leaf(child)
        else:
            stack.append(make_frame(child, fr["prefix"] + (w,)))
    return best_code, best_lab


def canonical_certificate(g: SimpleGraph, budget: int | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    parts = []
    for comp in connected_components(g):
        h = g.induced(comp)
        code, _ = canonical_labelling(h, budget)
        parts.append((h.n, code))
    parts.sort()
    return repr(parts).encode()
