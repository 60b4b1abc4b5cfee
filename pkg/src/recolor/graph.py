"""Finite simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """A simple graph with vertices ``0..n-1``.

    ``names`` is an optional presentation table; algorithms never look at it.
    """

    n: int
    edges: frozenset = frozenset()
    names: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("name table length must equal n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], names=None) -> "SimpleGraph":
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges), tuple(names) if names else None)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "SimpleGraph":
        return cls.from_edges(len(adj), ((u, v) for u, nb in enumerate(adj) for v in nb if u < v))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def permuted(self, perm: Sequence[int]) -> "SimpleGraph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return SimpleGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled in increasing order of the given ids."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return SimpleGraph.from_edges(
            len(vs), ((index[u], index[v]) for u, v in self.edges if u in index and v in index)
        )

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return SimpleGraph.from_edges(offset, edges)


def complement(g: SimpleGraph) -> SimpleGraph:
    return SimpleGraph.from_edges(
        g.n, (e for e in combinations(range(g.n), 2) if e not in g.edges)
    )


def connected_components(g: SimpleGraph) -> list[frozenset]:
    """Maximal connected vertex sets, ordered by their minimum vertex id."""
    seen = [False] * g.n
    comps = []
    adj = g.adj
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def is_proper_coloring(g: SimpleGraph, coloring) -> bool:
    values = getattr(coloring, "values", coloring)
    if len(values) != g.n:
        raise ValueError("coloring must assign a color to every vertex")
    return all(values[u] != values[v] for u, v in g.edges)


def _greedy_clique(g: SimpleGraph) -> list[int]:
    best: list[int] = []
    adj = g.adj
    for s in sorted(range(g.n), key=lambda v: -len(adj[v])):
        clique = [s]
        cand = set(adj[s])
        while cand:
            v = max(cand, key=lambda w: (len(adj[w] & cand), -w))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_colorable(g: SimpleGraph, k: int, seed: Sequence[int]) -> bool:
    """Exact k-colorability by DSATUR-ordered backtracking.

    ``seed`` is a clique; its vertices are precolored 0..len-1 to break color symmetry.
    """
    n = g.n
    adj = g.adj
    color = [-1] * n
    # forbidden[v][c] counts colored neighbours of v holding color c
    forbidden = [[0] * k for _ in range(n)]
    sat = [0] * n

    def assign(v, c):
        color[v] = c
        for w in adj[v]:
            row = forbidden[w]
            if row[c] == 0:
                sat[w] += 1
            row[c] += 1

    def unassign(v, c):
        color[v] = -1
        for w in adj[v]:
            row = forbidden[w]
            row[c] -= 1
            if row[c] == 0:
                sat[w] -= 1

    for i, v in enumerate(seed):
        assign(v, i)
    used_max = len(seed)

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kv = (sat[v], len(adj[v]))
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def solve(used):
        v = pick()
        if v < 0:
            return True
        row = forbidden[v]
        # colors beyond used+1 are symmetric to used, try only one fresh color
        for c in range(min(k, used + 1)):
            if row[c] == 0:
                assign(v, c)
                if solve(max(used, c + 1)):
                    return True
                unassign(v, c)
        return False

    return solve(used_max)


def chromatic_number(g: SimpleGraph) -> int:
    """Exact chromatic number (n >= 1)."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty-vertex graph is not defined here")
    if g.m == 0:
        return 1
    clique = _greedy_clique(g)
    k = max(len(clique), 2)
    while not _dsatur_colorable(g, k, clique):
        k += 1
    return k


def find_induced_c5(g: SimpleGraph):
    """Vertices (a, b, c, d, e) of an induced 5-cycle in cyclic order, or None.

    Anchors at a vertex ``a`` with non-adjacent neighbours ``b`` and ``e`` and
    looks for ``c ~ b``, ``d ~ e``, ``c ~ d`` avoiding every chord.
    """
    adj = [set(x) for x in g.adj]
    for a in range(g.n):
        closed_a = adj[a] | {a}
        nbrs = sorted(adj[a])
        for i, b in enumerate(nbrs):
            for e in nbrs[i + 1:]:
                if e in adj[b]:
                    continue
                for c in adj[b] - closed_a - adj[e]:
                    if c == e:
                        continue
                    ds = (adj[c] & adj[e]) - closed_a - adj[b] - {b}
                    if ds:
                        return (a, b, c, min(ds), e)
    return None
