"""Recover the component-wise color partition at an abstract link vertex.

Base vertices are named by the clique indices of the vertex's own neighbourhood
decomposition, so two link vertices generally use different names for the same
base vertex. Callers that need Phi-level names map cliques through edge labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import hypercube_from_corner
from .errors import NotALinkVertex, StructuralInconsistency
from .graph import SimpleGraph, chromatic_number
from .link import LinkReport, VertexProfile


@dataclass(frozen=True)
class ComponentwisePartition:
    alpha: int
    components: tuple  # per component: tuple of clique indices
    parts: tuple  # per component: tuple of frozensets of clique indices
    colors: tuple  # per component: color label f_i + j for part j (1-based)
    free: tuple  # f_i per component
    chi: tuple  # chromatic number per component
    candidates: tuple = ()  # how many candidates were examined / survived per component

    def part_of(self, clique: int) -> tuple[int, int]:
        for i, comp_parts in enumerate(self.parts):
            for j, part in enumerate(comp_parts):
                if clique in part:
                    return i, j
        raise KeyError(clique)

    def to_json(self) -> dict:
        return {
            "kind": "partition",
            "alpha": self.alpha,
            "components": [
                {
                    "cliques": list(comp),
                    "parts": [sorted(p) for p in parts],
                    "colors": list(cols),
                    "free_colors": f,
                    "chi": chi,
                    "candidates": list(cand) if cand else None,
                }
                for comp, parts, cols, f, chi, cand in zip(
                    self.components, self.parts, self.colors, self.free, self.chi,
                    self.candidates or [None] * len(self.components),
                )
            ],
        }


def set_partitions(items, blocks: int, allowed=None):
    """Partitions of ``items`` into exactly ``blocks`` blocks via restricted growth strings.

    ``allowed(block, x)`` may veto putting ``x`` into an existing block.
    Blocks come out ordered by their first element.
    """
    items = list(items)
    out = []
    cur: list[list] = []

    def rec(pos):
        remaining = len(items) - pos
        if len(cur) + remaining < blocks:
            return
        if pos == len(items):
            if len(cur) == blocks:
                out.append(tuple(frozenset(b) for b in cur))
            return
        x = items[pos]
        for b in cur:
            if allowed is None or allowed(b, x):
                b.append(x)
                rec(pos + 1)
                b.pop()
        if len(cur) < blocks:
            cur.append([x])
            rec(pos + 1)
            cur.pop()

    rec(0)
    return out


@dataclass
class CandidateCheck:
    ok: bool
    reason: str  # "ok", "step4", "step5-not-link", "step5-no-common-color"
    parts: list = field(default_factory=list)  # (part, antipode or None, status) per part


def _selection_for(prof: VertexProfile, comp_index: int, color: int) -> dict:
    comp = prof.components[comp_index]
    return dict(zip(comp, prof.selections[comp_index][color]))


def _in_one_selection(prof: VertexProfile, verts) -> bool:
    vs = set(verts)
    for sels in prof.selections:
        for sel in sels:
            if vs <= set(sel):
                return True
    return False


def check_candidate(c: SimpleGraph, report: LinkReport, alpha: int, comp_index: int,
                    blocks, color: int = 0) -> CandidateCheck:
    """Evaluate one candidate partition of a component without pruning.

    Every part is examined so the result records each part's fate; ``reason``
    is the first failure in the order: cube extension for all parts, then
    the antipode tests part by part.
    """
    prof = report.profile(alpha)
    sel = _selection_for(prof, comp_index, color)
    cubes = []
    for part in blocks:
        cubes.append(hypercube_from_corner(c, alpha, [sel[q] for q in sorted(part)]))
    results = []
    reason = "ok"
    for part, cube in zip(blocks, cubes):
        if cube is None:
            results.append((part, None, "step4"))
            if reason == "ok":
                reason = "step4"
    if reason != "ok":
        for part, cube in zip(blocks, cubes):
            if cube is not None:
                results.append((part, cube.antipode, "unchecked"))
        return CandidateCheck(False, reason, results)
    for part, cube in zip(blocks, cubes):
        beta = cube.antipode
        if beta not in report.A:
            status = "step5-not-link"
        elif not _in_one_selection(report.per_alpha[beta], cube.antipode_neighbors()):
            status = "step5-no-common-color"
        else:
            status = "ok"
        results.append((part, beta, status))
        if status != "ok" and reason == "ok":
            reason = status
    return CandidateCheck(reason == "ok", reason, results)


def algorithm2(c: SimpleGraph, report: LinkReport, alpha: int) -> ComponentwisePartition:
    if not report.ok:
        raise NotALinkVertex("algorithm aborted; no link vertices")
    prof = report.profile(alpha)
    M = prof.M
    comps, parts, colors, free, chis, counts = [], [], [], [], [], []
    for i, comp in enumerate(prof.components):
        sub = SimpleGraph.from_edges(len(comp), [
            (comp.index(a), comp.index(b)) for a, b in M if a in comp and b in comp
        ])
        chi = chromatic_number(sub)
        f_i = len(prof.selections[i])
        if f_i == 0:
            raise StructuralInconsistency(f"vertex {alpha}: component {i} has no common free color")

        def allowed(block, x):
            return all(((y, x) if y < x else (x, y)) not in M for y in block)

        cands = set_partitions(comp, chi, allowed)
        survivors = [b for b in cands if check_candidate(c, report, alpha, i, b).ok]
        if len(survivors) != 1:
            raise StructuralInconsistency(
                f"vertex {alpha}, component {i}: {len(survivors)} candidate partitions survive"
            )
        comps.append(comp)
        parts.append(survivors[0])
        colors.append(tuple(f_i + j for j in range(1, chi + 1)))
        free.append(f_i)
        chis.append(chi)
        counts.append((len(cands), len(survivors)))
    return ComponentwisePartition(alpha, tuple(comps), tuple(parts), tuple(colors),
                                  tuple(free), tuple(chis), tuple(counts))


class PartitionCache:
    """Memoized partitions and link moves for one (graph, report) pair."""

    def __init__(self, c: SimpleGraph, report: LinkReport):
        self.c = c
        self.report = report
        self._parts: dict = {}
        self._moves: dict = {}
        self._nbrs: dict = {}

    def partition(self, alpha: int) -> ComponentwisePartition:
        p = self._parts.get(alpha)
        if p is None:
            p = self._parts[alpha] = algorithm2(self.c, self.report, alpha)
        return p

    def is_member(self, x: int) -> bool:
        if x not in self.report.A:
            return False
        try:
            self.partition(x)
        except StructuralInconsistency:
            return False
        return True

    def moves(self, alpha: int) -> dict:
        """``(i, j, color) -> (neighbour, dimension)`` for every one-part recoloring.

        ``color`` indexes the component's common free colors at ``alpha`` (0-based).
        """
        mv = self._moves.get(alpha)
        if mv is not None:
            return mv
        part = self.partition(alpha)
        prof = self.report.per_alpha[alpha]
        mv = {}
        for i in range(len(part.components)):
            for col in range(part.free[i]):
                sel = _selection_for(prof, i, col)
                for j, block in enumerate(part.parts[i]):
                    cube = hypercube_from_corner(self.c, alpha, [sel[q] for q in sorted(block)])
                    if cube is None:
                        raise StructuralInconsistency(
                            f"vertex {alpha}: part {(i, j)} does not extend to a cube for color {col}"
                        )
                    mv[(i, j, col)] = (cube.antipode, len(block))
        self._moves[alpha] = mv
        return mv


    def l_neighbors(self, x: int) -> dict:
        """Link neighbours of ``x`` mapped to the cube dimension of the move (empty off the class)."""
        nb = self._nbrs.get(x)
        if nb is None:
            nb = {}
            if self.is_member(x):
                nb = {y: dim for (y, dim) in self.moves(x).values()}
            self._nbrs[x] = nb
        return nb


def link_moves(c: SimpleGraph, report: LinkReport, alpha: int, cache: PartitionCache | None = None) -> dict:
    cache = cache or PartitionCache(c, report)
    return cache.moves(alpha)
