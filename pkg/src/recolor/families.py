"""Generators for the named graph families used throughout the census."""

from __future__ import annotations

import re
from itertools import combinations

from .graph import SimpleGraph, disjoint_union


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> SimpleGraph:
    """Path on ``n`` vertices (P_n)."""
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty(n: int) -> SimpleGraph:
    """N_n: n vertices, no edges."""
    if n < 0:
        raise ValueError("N_n needs n >= 0")
    return SimpleGraph(n)


def complete_bipartite(r: int, s: int) -> SimpleGraph:
    if r < 1 or s < 1:
        raise ValueError("K_{r,s} needs r, s >= 1")
    return SimpleGraph.from_edges(r + s, ((i, r + j) for i in range(r) for j in range(s)))


def complete_multipartite(*sizes: int) -> SimpleGraph:
    if not sizes or min(sizes) < 1:
        raise ValueError("part sizes must be positive")
    owner = [p for p, size in enumerate(sizes) for _ in range(size)]
    n = len(owner)
    return SimpleGraph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))


def paw() -> SimpleGraph:
    """K_{1,3}+e. Vertex 0 is the pendant, 1 its neighbour, 1-2-3 the triangle."""
    return SimpleGraph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


def house() -> SimpleGraph:
    """The 5-cycle 0-1-3-4-2 plus the chord 2-3; identical to ``townhouse(1)``."""
    return townhouse(1)


def diamond() -> SimpleGraph:
    """K_4 minus an edge."""
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def friendship(m: int) -> SimpleGraph:
    """F_m: m triangles sharing vertex 0."""
    if m < 1:
        raise ValueError("F_m needs m >= 1")
    edges = []
    for t in range(m):
        a, b = 2 * t + 1, 2 * t + 2
        edges += [(0, a), (0, b), (a, b)]
    return SimpleGraph.from_edges(2 * m + 1, edges)


def townhouse(n: int) -> SimpleGraph:
    """TH_n: n houses in a row, consecutive houses share a wall, gable tops joined.

    Ids: floor corners ``0..n``, wall tops ``n+1..2n+1``, roof apexes ``2n+2..3n+1``.
    House ``i`` (0-based) is the square floor[i], floor[i+1], top[i+1], top[i]
    with apex roof[i] joined to top[i] and top[i+1].
    """
    if n < 1:
        raise ValueError("TH_n needs n >= 1")
    floor = list(range(n + 1))
    top = list(range(n + 1, 2 * n + 2))
    roof = list(range(2 * n + 2, 3 * n + 2))
    edges = []
    for i in range(n + 1):
        edges.append((floor[i], top[i]))
    for i in range(n):
        edges += [
            (floor[i], floor[i + 1]),
            (top[i], top[i + 1]),
            (roof[i], top[i]),
            (roof[i], top[i + 1]),
        ]
        if i:
            edges.append((roof[i - 1], roof[i]))
    return SimpleGraph.from_edges(3 * n + 2, edges)


def basement_townhouse(n: int) -> SimpleGraph:
    """TH_n plus one basement vertex per house, adjacent to that house's two floor corners."""
    th = townhouse(n)
    base = 3 * n + 2
    edges = list(th.edges)
    for i in range(n):
        edges += [(base + i, i), (base + i, i + 1)]
    return SimpleGraph.from_edges(4 * n + 2, edges)


def cone(g: SimpleGraph) -> SimpleGraph:
    """Append an apex vertex adjacent to every existing vertex."""
    return SimpleGraph.from_edges(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])


def bridged_k2_k3() -> SimpleGraph:
    """K_2 and K_3 joined by a single edge (5 vertices, 5 edges)."""
    return SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])


def pendant_c5() -> SimpleGraph:
    """C_5 on 0..4 with an extra vertex 5 hanging off vertex 2."""
    return SimpleGraph.from_edges(6, list(cycle(5).edges) + [(2, 5)])


_FAMILIES = {
    "K": (complete, 1),
    "C": (cycle, 1),
    "P": (path, 1),
    "N": (empty, 1),
    "Kbip": (complete_bipartite, 2),
    "paw": (paw, 0),
    "house": (house, 0),
    "diamond": (diamond, 0),
    "friendship": (friendship, 1),
    "townhouse": (townhouse, 1),
    "basement": (basement_townhouse, 1),
    "bridged": (bridged_k2_k3, 0),
    "pendant_c5": (pendant_c5, 0),
}


def named(family: str, *params: int) -> SimpleGraph:
    """Build a family member by identifier, e.g. ``named("C", 5)`` or ``named("paw")``."""
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}; known: {sorted(_FAMILIES)}") from None
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


_SHORT = [
    (re.compile(r"^K_?\{?(\d+),(\d+)\}?$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^K_?(\d+)-e$"), lambda m: _minus_edge(int(m[1]))),
    (re.compile(r"^([KCPN])_?(\d+)$"), lambda m: named(m[1], int(m[2]))),
    (re.compile(r"^F_?(\d+)$"), lambda m: friendship(int(m[1]))),
    (re.compile(r"^TH_?(\d+)$"), lambda m: townhouse(int(m[1]))),
    (re.compile(r"^BTH_?(\d+)$"), lambda m: basement_townhouse(int(m[1]))),
]


def _minus_edge(n: int) -> SimpleGraph:
    if n < 2:
        raise ValueError("K_n-e needs n >= 2")
    return SimpleGraph.from_edges(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def parse_name(text: str) -> SimpleGraph:
    """Parse short names such as ``C5``, ``K4-e``, ``K2,3``, ``F2``, ``TH3``, ``paw``.

    ``+`` joins graphs disjointly, and a leading multiplier repeats one: ``6*P4``.
    """
    text = text.strip()
    if "+" in text:
        return disjoint_union(*(parse_name(t) for t in text.split("+")))
    m = re.match(r"^(\d+)\*(.+)$", text)
    if m:
        return disjoint_union(*([parse_name(m[2])] * int(m[1])))
    for pat, build in _SHORT:
        m = pat.match(text)
        if m:
            return build(m)
    if text in _FAMILIES and _FAMILIES[text][1] == 0:
        return named(text)
    raise ValueError(f"cannot parse graph name {text!r}")

FAMILIES = tuple(sorted(_FAMILIES))
