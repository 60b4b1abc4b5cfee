"""Proper colorings, k-coloring graphs, and the hypercube/free-color primitives."""

from __future__ import annotations

import os
import random
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import AmbiguityError, BudgetExceeded, PreconditionError, SurplusViolation
from .graph import SimpleGraph, chromatic_number, connected_components

DEFAULT_COLORING_CAP = 10**6


def default_cap() -> int:
    return int(os.environ.get("RECOLOR_COLORING_CAP", DEFAULT_COLORING_CAP))


@dataclass(frozen=True)
class Coloring:
    """Palette ids ``1..k`` indexed by base-graph vertex."""

    values: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if any(not 1 <= c <= self.k for c in self.values):
            raise ValueError(f"colors must lie in 1..{self.k}: {self.values}")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v):
        return self.values[v]

    def __str__(self):
        if self.k < 10:
            return "".join(map(str, self.values))
        return ",".join(map(str, self.values))


def enumerate_colorings(g: SimpleGraph, k: int, cap: int | None = None) -> list[tuple]:
    """All proper k-colorings of ``g`` as value tuples, in lexicographic order."""
    cap = default_cap() if cap is None else cap
    n = g.n
    earlier = [sorted(u for u in g.adj[v] if u < v) for v in range(n)]
    out: list[tuple] = []
    cur = [0] * n

    def rec(v):
        if v == n:
            out.append(tuple(cur))
            if len(out) > cap:
                raise BudgetExceeded("proper coloring count", cap)
            return
        used = {cur[u] for u in earlier[v]}
        for c in range(1, k + 1):
            if c not in used:
                cur[v] = c
                rec(v + 1)

    if k >= 1 or n == 0:
        rec(0)
    return out


@dataclass(frozen=True)
class RecolorLabel:
    """Recoloring ``vertex`` from ``before`` (at the lower endpoint) to ``after``."""

    vertex: int
    before: int
    after: int

    def __str__(self):
        return f"{self.before}v{self.vertex}{self.after}"


@dataclass(frozen=True, eq=False)
class LabeledColoringGraph:
    """C_k(G) together with the bijection from its vertices to colorings."""

    skeleton: SimpleGraph
    base: SimpleGraph
    k: int
    colorings: tuple
    edge_labels: dict

    def phi(self, v: int) -> Coloring:
        return Coloring(self.colorings[v], self.k)

    def vertex_of(self, values: Sequence[int]) -> int:
        return self._index[tuple(values)]

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {c: i for i, c in enumerate(self.colorings)}
            self.__dict__["_idx"] = idx
        return idx

    def label(self, u: int, v: int) -> RecolorLabel:
        """Label oriented from ``u`` to ``v``."""
        lab = self.edge_labels[(min(u, v), max(u, v))]
        return lab if u < v else RecolorLabel(lab.vertex, lab.after, lab.before)


def build_coloring_graph(g: SimpleGraph, k: int, cap: int | None = None) -> LabeledColoringGraph:
    cols = enumerate_colorings(g, k, cap)
    buckets: dict = defaultdict(list)
    for i, c in enumerate(cols):
        for v in range(g.n):
            buckets[(v, c[:v] + c[v + 1:])].append(i)
    labels = {}
    for (v, _), members in buckets.items():
        for a, b in combinations(members, 2):
            labels[(a, b)] = RecolorLabel(v, cols[a][v], cols[b][v])
    skel = SimpleGraph(len(cols), frozenset(labels))
    return LabeledColoringGraph(skel, g, k, tuple(cols), labels)


def coloring_graph(g: SimpleGraph, k: int, cap: int | None = None) -> SimpleGraph:
    return build_coloring_graph(g, k, cap).skeleton


def strip_permutation(n: int, seed: int) -> list[int]:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm


def strip_labels(lcg: LabeledColoringGraph, seed: int) -> SimpleGraph:
    """Skeleton with vertex ``v`` renamed ``strip_permutation(n, seed)[v]``."""
    return lcg.skeleton.permuted(strip_permutation(lcg.skeleton.n, seed))


def _values(c) -> tuple:
    return tuple(getattr(c, "values", c))


def free_colors(g: SimpleGraph, c: Coloring, v: int) -> frozenset:
    taken = {c[u] for u in g.adj[v]}
    taken.add(c[v])
    return frozenset(x for x in range(1, c.k + 1) if x not in taken)


def is_link_coloring(g: SimpleGraph, c: Coloring) -> bool:
    if g.n == 0:
        return True
    if c.k <= chromatic_number(g):
        raise SurplusViolation(f"link colorings need k > chi(G); got k={c.k}")
    for comp in connected_components(g):
        used = {c[v] for v in comp}
        if len(used) != chromatic_number(g.induced(comp)):
            return False
    return True


def is_weak_link_coloring(g: SimpleGraph, c: Coloring) -> bool:
    free = [free_colors(g, c, v) for v in range(g.n)]
    return all(free[u] & free[v] for u, v in g.edges)


def link_colorings(g: SimpleGraph, k: int, cap: int | None = None) -> list[tuple]:
    return [c for c in enumerate_colorings(g, k, cap) if is_link_coloring(g, Coloring(c, k))]


@dataclass(frozen=True)
class HypercubeWitness:
    corner: int
    dimensions: tuple
    antipode: int
    layer_map: dict

    def antipode_neighbors(self) -> list[int]:
        """Cube vertices adjacent to the antipode, one per dimension."""
        full = frozenset(self.dimensions)
        return [self.layer_map[full - {d}] for d in self.dimensions]


def hypercube_from_corner(c: SimpleGraph, corner: int, dims: Iterable[int]) -> HypercubeWitness | None:
    """Fill in the induced hypercube spanned at ``corner`` by the edges to ``dims``.

    Each subset of ``dims`` is completed as the unique common neighbour of its
    one-smaller subsets that is not already in the cube.
    """
    dims = tuple(dims)
    adj = c.adj
    if len(set(dims)) != len(dims) or any(d not in adj[corner] for d in dims):
        raise PreconditionError("dims must be distinct neighbours of the corner")
    layer = {frozenset(): corner}
    for d in dims:
        layer[frozenset([d])] = d
    placed = {corner, *dims}
    if len(placed) != len(dims) + 1:
        return None
    current = [frozenset([d]) for d in dims]
    for size in range(2, len(dims) + 1):
        nxt = []
        for subset in map(frozenset, combinations(dims, size)):
            lower = [layer[subset - {x}] for x in subset]
            cand = set(adj[lower[0]])
            for w in lower[1:]:
                cand &= adj[w]
            cand -= placed
            if not cand:
                return None
            if len(cand) > 1:
                raise AmbiguityError(f"hypercube layer at corner {corner} has completions {sorted(cand)}")
            (w,) = cand
            layer[subset] = w
            placed.add(w)
            nxt.append(subset)
        current = nxt
    # induced: only Hamming-adjacent subsets may be adjacent
    items = list(layer.items())
    for (s1, u), (s2, v) in combinations(items, 2):
        if (v in adj[u]) != (len(s1 ^ s2) == 1):
            return None
    return HypercubeWitness(corner, dims, layer[frozenset(dims)], layer)
