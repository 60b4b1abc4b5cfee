"""Equivalence classes of link vertices and their consistently labeled link graph.

Starting from one link vertex the class is explored breadth first. Every
vertex carries a *state*: the color label of each part ``(i, j)``. Labels are
opaque integers in ``1..k``; at the anchor the free colors of component ``i``
are ``1..f_i`` and part ``j`` is colored ``f_i + j``. An edge label
``(a, (i, j), b)`` says part ``(i, j)`` goes from ``a`` to ``b``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

from .errors import NotALinkVertex, PreconditionError, StructuralInconsistency
from .graph import SimpleGraph
from .link import LinkReport
from .partition import ComponentwisePartition, PartitionCache


@dataclass(frozen=True)
class EdgeLabel:
    from_color: int
    part: tuple  # (component index, part index)
    to_color: int

    def __post_init__(self):
        if self.from_color == self.to_color:
            raise ValueError("an edge label must change the color")

    def reversed(self) -> "EdgeLabel":
        return EdgeLabel(self.to_color, self.part, self.from_color)

    def __str__(self):
        i, j = self.part
        return f"{self.from_color}P{i + 1},{j + 1} {self.to_color}"


@dataclass
class LabeledLinkGraph:
    vertices: frozenset
    edges: dict  # (u, v) with u < v -> EdgeLabel read from u to v
    anchor: int
    partition: ComponentwisePartition
    k: int
    states: dict = field(default_factory=dict, repr=False)
    order: list = field(default_factory=list, repr=False)  # discovery order

    def label(self, u: int, v: int) -> EdgeLabel:
        if u < v:
            return self.edges[(u, v)]
        return self.edges[(v, u)].reversed()

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def skeleton(self) -> SimpleGraph:
        """Unlabeled graph on the class, vertices renumbered in increasing id order."""
        vs = sorted(self.vertices)
        idx = {v: i for i, v in enumerate(vs)}
        return SimpleGraph.from_edges(len(vs), ((idx[a], idx[b]) for a, b in self.edges))

    def to_json(self) -> dict:
        return {
            "kind": "labeled-link-graph",
            "anchor": self.anchor,
            "k": self.k,
            "vertices": sorted(self.vertices),
            "edges": [
                {"u": u, "v": v, "from": lab.from_color, "part": list(lab.part), "to": lab.to_color}
                for (u, v), lab in sorted(self.edges.items())
            ],
            "partition": self.partition.to_json(),
        }


def degree_formula(chis, k: int) -> int:
    return sum(chi * (k - chi) for chi in chis)


class _Builder:
    """Mutable state of one breadth-first labeling run."""

    def __init__(self, c: SimpleGraph, report: LinkReport, alpha: int, cache: PartitionCache):
        self.c = c
        self.report = report
        self.cache = cache
        self.alpha = alpha
        self.part = cache.partition(alpha)
        self.k = report.k
        self.chis = self.part.chi
        self.sizes = {(i, j): len(p) for i, parts in enumerate(self.part.parts) for j, p in enumerate(parts)}
        self.states: dict = {}
        self.edges: dict = {}
        self.inc: dict = defaultdict(dict)  # x -> {y: label read x -> y}
        self.order: list = []
        self.pos: dict = {}
        self.queue: deque = deque()
        self.done: set = set()

    # -- structure ----------------------------------------------------------

    def l_neighbors(self, x: int) -> dict:
        """Link-graph neighbours of ``x`` mapped to the cube dimension of the move."""
        return self.cache.l_neighbors(x)

    # -- labels -------------------------------------------------------------

    def add_vertex(self, x: int, state: dict):
        old = self.states.get(x)
        if old is None:
            if not self.cache.is_member(x):
                raise StructuralInconsistency(f"vertex {x} reached by a class move is not a link vertex")
            self.states[x] = dict(state)
            self.pos[x] = len(self.order)
            self.order.append(x)
            self.queue.append(x)
        elif old != state:
            raise StructuralInconsistency(f"vertex {x} reached with two different color states")

    def add_edge(self, x: int, y: int, lab: EdgeLabel):
        if y not in self.l_neighbors(x):
            raise StructuralInconsistency(f"{x} and {y} are not cube-antipodal")
        sx = self.states[x]
        if sx[lab.part] != lab.from_color:
            raise StructuralInconsistency(f"edge {x}-{y}: part {lab.part} is {sx[lab.part]} at {x}, not {lab.from_color}")
        sy = dict(sx)
        sy[lab.part] = lab.to_color
        self.add_vertex(y, sy)
        key, oriented = ((x, y), lab) if x < y else ((y, x), lab.reversed())
        old = self.edges.get(key)
        if old is None:
            self.edges[key] = oriented
            self.inc[x][y] = lab
            self.inc[y][x] = lab.reversed()
        elif old != oriented:
            raise StructuralInconsistency(f"edge {key} labeled {old} and {oriented}")

    def labeled_moves(self, x: int) -> dict:
        """``(i, j, target color) -> neighbour`` over the labeled edges at ``x``."""
        return {(*lab.part, lab.to_color): y for y, lab in self.inc[x].items()}

    def free(self, x: int, i: int) -> list[int]:
        used = {col for (ci, _), col in self.states[x].items() if ci == i}
        return [col for col in range(1, self.k + 1) if col not in used]

    def lookup(self, moves: dict, key, at):
        try:
            return moves[key]
        except KeyError:
            raise StructuralInconsistency(f"no labeled edge {key} at {at}") from None

    def common_neighbor(self, b: int, d: int, avoid: int) -> int:
        nb = self.l_neighbors(b).keys() & self.l_neighbors(d).keys()
        nb.discard(avoid)
        if len(nb) != 1:
            raise StructuralInconsistency(
                f"{b} and {d} have {len(nb)} common link neighbours besides {avoid}"
            )
        return nb.pop()

    # -- steps --------------------------------------------------------------

    def seed(self):
        a = self.alpha
        state = {}
        for i, cols in enumerate(self.part.colors):
            for j, col in enumerate(cols):
                state[(i, j)] = col
        self.states[a] = state
        self.pos[a] = 0
        self.order.append(a)
        moves = self.cache.moves(a)
        for i in range(len(self.part.components)):
            for col in range(1, self.part.free[i] + 1):
                for j in range(self.chis[i]):
                    beta, _ = moves[(i, j, col - 1)]
                    self.add_edge(a, beta, EdgeLabel(state[(i, j)], (i, j), col))
        self.done.add(a)

    def predecessor(self, beta: int) -> int:
        cands = [g for g in self.inc[beta] if g in self.done]
        if cands:
            return min(cands, key=self.pos.__getitem__)
        raise StructuralInconsistency(f"vertex {beta} has no processed predecessor")

    def process(self, beta: int):
        g = self.predecessor(beta)
        lab = self.label(g, beta)
        i, j = lab.part
        cj, c = lab.from_color, lab.to_color
        gm = self.labeled_moves(g)
        nparts = self.chis[i]
        Fi = self.free(g, i)

        # (a) other parts of the same component to the same free color
        for kk in range(nparts):
            if kk == j:
                continue
            ck = self.states[g][(i, kk)]
            delta = self.lookup(gm, (i, kk, c), g)
            b1, b2, b3 = unique_avoiding_path(self, g, beta, delta)
            self.add_edge(beta, b1, EdgeLabel(ck, (i, kk), cj))
            self.add_edge(b1, b2, EdgeLabel(c, (i, j), ck))
            self.add_edge(b2, b3, EdgeLabel(cj, (i, kk), c))
            self.add_edge(b3, delta, EdgeLabel(ck, (i, j), cj))

        # (b) other parts of the same component to a different free color
        for kk in range(nparts):
            if kk == j:
                continue
            ck = self.states[g][(i, kk)]
            for ct in Fi:
                if ct == c:
                    continue
                delta = self.lookup(gm, (i, kk, ct), g)
                b1 = self.common_neighbor(beta, delta, g)
                self.add_edge(beta, b1, EdgeLabel(ck, (i, kk), ct))
                self.add_edge(b1, delta, EdgeLabel(c, (i, j), cj))

        # (c) the same part to a different free color
        for ct in Fi:
            if ct == c:
                continue
            delta = self.lookup(gm, (i, j, ct), g)
            self.add_edge(delta, beta, EdgeLabel(ct, (i, j), c))

        # (d) parts of other components
        for ell in range(len(self.chis)):
            if ell == i:
                continue
            for kk in range(self.chis[ell]):
                cs = self.states[g][(ell, kk)]
                for ct in self.free(g, ell):
                    delta = self.lookup(gm, (ell, kk, ct), g)
                    b1 = self.common_neighbor(beta, delta, g)
                    self.add_edge(beta, b1, EdgeLabel(cs, (ell, kk), ct))
                    self.add_edge(b1, delta, EdgeLabel(c, (i, j), cj))

        deg = len(self.inc[beta])
        want = degree_formula(self.chis, self.k)
        if deg != want or len(self.l_neighbors(beta)) != want:
            raise StructuralInconsistency(f"vertex {beta} has labeled degree {deg}, expected {want}")
        self.done.add(beta)

    def label(self, u, v) -> EdgeLabel:
        return self.edges[(u, v)] if u < v else self.edges[(v, u)].reversed()

    def run(self) -> LabeledLinkGraph:
        self.seed()
        while self.queue:
            beta = self.queue.popleft()
            if beta in self.done:
                continue
            self.process(beta)
        return LabeledLinkGraph(frozenset(self.states), dict(self.edges), self.alpha, self.part,
                                self.k, self.states, self.order)


def unique_avoiding_path(builder: _Builder, alpha: int, alpha1: int, alpha2: int) -> tuple:
    """The three inner vertices of the only shortest ``alpha``-avoiding path alpha1 -> alpha2.

    ``alpha1`` and ``alpha2`` must hang off ``alpha`` by recoloring two
    different parts of one component to the same free color. Steps are link
    moves alternating between the two part sizes, starting with the part that
    ``alpha2`` moved. Inner vertices must stay away from every other link
    neighbour of ``alpha``: with two or more spare colors there are detours
    through a fourth color, and those all touch such a neighbour.
    """
    try:
        l1 = builder.label(alpha, alpha1)
        l2 = builder.label(alpha, alpha2)
    except KeyError:
        raise PreconditionError("both endpoints must already be labeled neighbours of alpha") from None
    if l1.part[0] != l2.part[0] or l1.part == l2.part or l1.to_color != l2.to_color:
        raise PreconditionError(
            "endpoints must recolor two different parts of one component to the same color"
        )
    d1 = builder.sizes[l1.part]
    d2 = builder.sizes[l2.part]
    dims = (d2, d1, d2, d1)
    around = set(builder.l_neighbors(alpha))
    fenced = around - {alpha1, alpha2}
    ok_cache: dict = {}

    def inner_ok(x):
        r = ok_cache.get(x)
        if r is None:
            r = ok_cache[x] = (x != alpha and x not in around
                               and not (builder.l_neighbors(x).keys() & fenced))
        return r

    def steps(x, dim):
        return [y for y, dm in builder.l_neighbors(x).items() if dm == dim]

    # forward half: alpha1 -> b -> g, backward half: alpha2 -> d -> g
    paths = []
    layer = [(alpha1,)]
    for s in range(3):
        nxt = []
        for path in layer:
            for y in steps(path[-1], dims[s]):
                if y == alpha2:
                    raise StructuralInconsistency(
                        f"path of length {s + 1} from {alpha1} to {alpha2} avoiding {alpha}")
                if inner_ok(y) and y not in path:
                    nxt.append(path + (y,))
        layer = nxt
        if s == 1:
            break
    fwd: dict = {}
    for path in layer:
        fwd.setdefault(path[-1], []).append(path[1])
    for d in steps(alpha2, dims[3]):
        if not inner_ok(d):
            continue
        for g in steps(d, dims[2]):
            if g == alpha1:
                raise StructuralInconsistency(f"path of length 2 from {alpha1} to {alpha2} avoiding {alpha}")
            for b in fwd.get(g, ()):
                if len({alpha1, b, g, d, alpha2}) == 5:
                    paths.append((b, g, d))
    if len(paths) != 1:
        raise StructuralInconsistency(
            f"{len(paths)} alternating length-4 paths from {alpha1} to {alpha2} avoiding {alpha}"
        )
    return paths[0]


def algorithm3(c: SimpleGraph, report: LinkReport, alpha: int, cache: PartitionCache | None = None) -> LabeledLinkGraph:
    if not report.ok:
        raise NotALinkVertex("algorithm aborted; no link vertices")
    if alpha not in report.A:
        raise NotALinkVertex(f"vertex {alpha} is not an abstract link vertex")
    cache = cache or PartitionCache(c, report)
    llg = _Builder(c, report, alpha, cache).run()
    want = degree_formula(llg.partition.chi, llg.k)
    if any(d != want for d in llg.degrees().values()):
        raise StructuralInconsistency("labeled link graph is not regular of the expected degree")
    return llg


def equivalence_class(c: SimpleGraph, report: LinkReport, alpha: int, cache: PartitionCache | None = None) -> frozenset:
    return algorithm3(c, report, alpha, cache).vertices


def _part_neighbors(llg, x):
    out = {}
    for y in llg.neighbors(x):
        out.setdefault(llg.label(x, y).part, set()).add(y)
    return {p: frozenset(s) for p, s in out.items()}


def label_isomorphic(a, b) -> bool:
    """Same vertices and edges, labels equal after renaming parts and per-component colors.

    Parts are matched through the neighbour sets they generate at one shared
    vertex; color renamings are then forced edge by edge.
    """
    if a.vertices != b.vertices or set(a.edges) != set(b.edges):
        return False
    if not a.vertices:
        return True
    x = min(a.vertices)
    pa, pb = _part_neighbors(a, x), _part_neighbors(b, x)
    inv = {s: p for p, s in pb.items()}
    if len(inv) != len(pb) or len(pa) != len(pb):
        return False
    part_map = {}
    for p, s in pa.items():
        if s not in inv:
            return False
        part_map[p] = inv[s]
    comp_map = {}
    for p, q in part_map.items():
        if comp_map.setdefault(p[0], q[0]) != q[0]:
            return False
    if len(set(comp_map.values())) != len(comp_map):
        return False
    fwd: dict = {}
    bwd: dict = {}

    def bind(comp, u, v):
        if fwd.setdefault((comp, u), v) != v or bwd.setdefault((comp, v), u) != u:
            return False
        return True

    for key in a.edges:
        la, lb = a.edges[key], b.edges[key]
        if la.part not in part_map or part_map[la.part] != lb.part:
            return False
        comp = la.part[0]
        if not (bind(comp, la.from_color, lb.from_color) and bind(comp, la.to_color, lb.to_color)):
            return False
    return True


def cube_chain(c: SimpleGraph, builder_or_cache, path) -> bool:
    """True when consecutive vertices of ``path`` are cube-antipodal link neighbours."""
    cache = builder_or_cache
    return all(y in {n for n, _ in cache.moves(x).values()} for x, y in zip(path, path[1:]))
