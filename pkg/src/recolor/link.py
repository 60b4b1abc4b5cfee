"""Abstract link vertices and base-graph reconstruction from an unlabeled coloring graph.

The filter runs in stages over every vertex of the input:

1. keep vertices whose neighbourhood is a disjoint union of cliques;
2. keep those with the most cliques (``n``);
3. keep those with the most clique pairs missing at least one spanning square (``m``);
4. the deficient pairs form an adjacency matrix ``M`` on the cliques;
5. per component of ``M``, count the one-per-clique selections that avoid a
   square on every matrix edge (each is one common free color);
6. keep those with the largest total count ``f``;
7. read ``G`` off ``M`` and solve for the palette size;
8. confirm the input really is the coloring graph of ``(G, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import build_coloring_graph, default_cap
from .errors import BudgetExceeded, NotALinkVertex
from .graph import SimpleGraph, chromatic_number, connected_components
from .iso import canonical_certificate, graph_isomorphic
from .io import graph_from_json, graph_to_json


@dataclass(frozen=True)
class CliqueDecomposition:
    center: int
    cliques: tuple  # tuple of sorted tuples, ordered by minimum id

    @property
    def sizes(self) -> tuple:
        return tuple(len(q) for q in self.cliques)

    def __len__(self):
        return len(self.cliques)


def clique_neighborhood(c: SimpleGraph, v: int) -> CliqueDecomposition | None:
    adj = c.adj
    nb = adj[v]
    seen = set()
    cliques = []
    for s in sorted(nb):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x] & nb:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        if any(len(adj[x] & comp) != len(comp) - 1 for x in comp):
            return None
        cliques.append(tuple(sorted(comp)))
    return CliqueDecomposition(v, tuple(cliques))


def _square_pairs(c: SimpleGraph, dec: CliqueDecomposition, i: int, j: int) -> set:
    """Pairs (b_i, b_j) closed into a 4-cycle by a vertex outside N[center]."""
    adj = c.adj
    closed = adj[dec.center] | {dec.center}
    out = set()
    for a in dec.cliques[i]:
        na = adj[a]
        for b in dec.cliques[j]:
            if any(x not in closed for x in na & adj[b]):
                out.add((a, b))
    return out


def spanning_square_count(c: SimpleGraph, dec: CliqueDecomposition, i: int, j: int) -> int:
    if i == j:
        raise ValueError("spanning squares need two distinct cliques")
    return len(_square_pairs(c, dec, i, j))


@dataclass
class VertexProfile:
    """Everything the filter learns about one candidate vertex."""

    alpha: int
    cliques: tuple
    t: tuple
    M: frozenset = frozenset()  # deficient clique pairs (i, j), i < j
    components: tuple = ()  # tuples of clique indices, ordered by min index
    selections: tuple = ()  # per component: tuple of selections (one vertex per clique)
    squares: dict = field(default_factory=dict, repr=False)

    @property
    def n(self):
        return len(self.cliques)

    @property
    def m(self):
        return len(self.M)

    @property
    def f_components(self):
        return tuple(len(s) for s in self.selections)

    @property
    def f(self):
        return sum(self.f_components)

    def matrix(self) -> list[list[int]]:
        M = [[0] * self.n for _ in range(self.n)]
        for i, j in self.M:
            M[i][j] = M[j][i] = 1
        return M

    def base_graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.n, self.M)

    def to_json(self) -> dict:
        return {
            "cliques": [list(q) for q in self.cliques],
            "t": list(self.t),
            "M": sorted(list(e) for e in self.M),
            "components": [list(x) for x in self.components],
            "f_components": list(self.f_components),
            "selections": [[list(s) for s in sel] for sel in self.selections],
        }

    @classmethod
    def from_json(cls, alpha, doc) -> "VertexProfile":
        return cls(
            alpha=int(alpha),
            cliques=tuple(tuple(q) for q in doc["cliques"]),
            t=tuple(doc["t"]),
            M=frozenset(tuple(e) for e in doc["M"]),
            components=tuple(tuple(x) for x in doc["components"]),
            selections=tuple(tuple(tuple(s) for s in sel) for sel in doc["selections"]),
        )


def _fill_matrix(c: SimpleGraph, dec: CliqueDecomposition, prof: VertexProfile):
    deficient = []
    for i, j in combinations(range(len(dec)), 2):
        sq = _square_pairs(c, dec, i, j)
        if len(sq) < prof.t[i] * prof.t[j]:
            deficient.append((i, j))
            prof.squares[(i, j)] = sq
    prof.M = frozenset(deficient)
    comps = connected_components(SimpleGraph.from_edges(prof.n, deficient))
    prof.components = tuple(tuple(sorted(x)) for x in comps)


def _fill_selections(prof: VertexProfile):
    """Backtrack over one-per-clique choices that leave every matrix edge square-free."""
    out = []
    for comp in prof.components:
        found = []
        chosen: list[int] = []

        def rec(pos):
            if pos == len(comp):
                found.append(tuple(chosen))
                return
            ci = comp[pos]
            for b in prof.cliques[ci]:
                ok = True
                for q in range(pos):
                    cj = comp[q]
                    key = (cj, ci) if cj < ci else (ci, cj)
                    if key in prof.M:
                        pair = (chosen[q], b) if cj < ci else (b, chosen[q])
                        if pair in prof.squares[key]:
                            ok = False
                            break
                if ok:
                    chosen.append(b)
                    rec(pos + 1)
                    chosen.pop()

        rec(0)
        out.append(tuple(found))
    prof.selections = tuple(out)


def vertex_profile(c: SimpleGraph, alpha: int) -> VertexProfile | None:
    """Run the per-vertex measurements (cliques, matrix, selections) at ``alpha``."""
    dec = clique_neighborhood(c, alpha)
    if dec is None:
        return None
    prof = VertexProfile(alpha, dec.cliques, dec.sizes)
    _fill_matrix(c, dec, prof)
    _fill_selections(prof)
    return prof


@dataclass
class Abort:
    """Algorithm 1 gave up; ``stage`` says why, ``step`` where."""

    stage: str
    step: int
    candidate: tuple | None = None  # (G, k) when one was formed
    diagnostics: dict = field(default_factory=dict)
    attrition: list = field(default_factory=list)

    ok = False

    def to_json(self) -> dict:
        doc = {"kind": "abort", "stage": self.stage, "step": self.step,
               "diagnostics": self.diagnostics, "attrition": self.attrition}
        if self.candidate is not None:
            g, k = self.candidate
            doc["candidate"] = {"G": graph_to_json(g), "k": k}
        return doc


@dataclass
class LinkReport:
    A: frozenset
    n: int
    m: int
    M: list
    f: int
    k: int
    G: SimpleGraph
    anchor: int
    per_alpha: dict
    attrition: list = field(default_factory=list)
    matrix_classes: int = 1

    ok = True

    def __contains__(self, v):
        return v in self.A

    def profile(self, alpha: int) -> VertexProfile:
        if alpha not in self.A:
            raise NotALinkVertex(f"vertex {alpha} is not an abstract link vertex")
        return self.per_alpha[alpha]

    def to_json(self) -> dict:
        return {
            "kind": "link-report",
            "A": sorted(self.A),
            "n": self.n,
            "m": self.m,
            "M": self.M,
            "f": self.f,
            "k": self.k,
            "G": graph_to_json(self.G),
            "anchor": self.anchor,
            "matrix_classes": self.matrix_classes,
            "attrition": self.attrition,
            "per_alpha": {str(a): p.to_json() for a, p in sorted(self.per_alpha.items())},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LinkReport":
        if doc.get("kind") != "link-report":
            raise ValueError(f"expected a link-report document, got kind={doc.get('kind')!r}")
        per = {int(a): VertexProfile.from_json(a, p) for a, p in doc["per_alpha"].items()}
        return cls(
            A=frozenset(doc["A"]), n=doc["n"], m=doc["m"], M=doc["M"], f=doc["f"], k=doc["k"],
            G=graph_from_json(doc["G"]), anchor=doc["anchor"], per_alpha=per,
            attrition=doc.get("attrition", []), matrix_classes=doc.get("matrix_classes", 1),
        )


def _keep_max(cands: dict, key) -> tuple[dict, int]:
    best = max(key(p) for p in cands.values())
    return {a: p for a, p in cands.items() if key(p) == best}, best


def _candidate(prof: VertexProfile, f: int):
    g = prof.base_graph()
    comps = connected_components(g)
    d = len(comps)
    total = f + sum(chromatic_number(g.induced(h)) for h in comps)
    return g, d, total


def algorithm1(c: SimpleGraph) -> LinkReport | Abort:
    attrition = [{"step": 0, "remaining": c.n}]

    # steps 1-2
    decs = {}
    for v in range(c.n):
        dec = clique_neighborhood(c, v)
        if dec is not None:
            decs[v] = dec
    attrition.append({"step": 1, "remaining": len(decs)})
    if not decs:
        return Abort("no-candidates", 1, attrition=attrition)
    n = max(len(d) for d in decs.values())
    decs = {v: d for v, d in decs.items() if len(d) == n}
    attrition.append({"step": 2, "remaining": len(decs), "n": n})
    if n == 0:
        # only isolated vertices: no base vertex has a free color anywhere
        return Abort("no-candidates", 2, diagnostics={"n": 0}, attrition=attrition)

    # steps 3-4
    profs = {}
    for v, dec in decs.items():
        prof = VertexProfile(v, dec.cliques, dec.sizes)
        _fill_matrix(c, dec, prof)
        profs[v] = prof
    profs, m = _keep_max(profs, lambda p: p.m)
    attrition.append({"step": 3, "remaining": len(profs), "m": m})

    # steps 5-6
    for prof in profs.values():
        _fill_selections(prof)
    profs, f = _keep_max(profs, lambda p: p.f)
    attrition.append({"step": 6, "remaining": len(profs), "f": f})

    # step 7, one candidate per matrix isomorphism class, in order of anchor id
    by_cert: dict = {}
    for a in sorted(profs):
        cert = canonical_certificate(profs[a].base_graph())
        by_cert.setdefault(cert, a)
    anchors = list(by_cert.values())

    first_abort = None
    for anchor in anchors:
        prof = profs[anchor]
        g, d, total = _candidate(prof, f)
        diag = {"n": n, "m": m, "f": f, "d": d, "anchor": anchor, "matrix_classes": len(anchors)}
        if total % d:
            first_abort = first_abort or Abort("non-integral-k", 7, (g, total / d), diag, attrition)
            continue
        k = total // d
        if k <= chromatic_number(g):
            first_abort = first_abort or Abort("non-surplus-k", 7, (g, k), diag, attrition)
            continue
        # step 8
        cap = default_cap()
        if c.n > cap:
            raise BudgetExceeded("proper coloring count", cap)
        try:
            cand = build_coloring_graph(g, k, cap=c.n)
        except BudgetExceeded:
            cand = None
        phi = graph_isomorphic(c, cand.skeleton) if cand is not None else None
        if phi is None:
            diag["candidate_vertices"] = len(cand.colorings) if cand is not None else f"> {c.n}"
            first_abort = first_abort or Abort("iso-check-failed", 8, (g, k), diag, attrition)
            continue
        return LinkReport(
            A=frozenset(profs), n=n, m=m, M=prof.matrix(), f=f, k=k, G=g, anchor=anchor,
            per_alpha=profs, attrition=attrition, matrix_classes=len(anchors),
        )
    return first_abort


def is_abstract_link_vertex(c: SimpleGraph, v: int, report=None) -> bool:
    """Membership of ``v`` in the surviving set; supply ``report`` to skip recomputation."""
    report = algorithm1(c) if report is None else report
    if not report.ok:
        raise NotALinkVertex(f"algorithm aborted ({report.stage}); link vertices are undefined")
    return v in report.A


def report_from_json(doc: dict):
    if doc.get("kind") == "abort":
        cand = doc.get("candidate")
        return Abort(doc["stage"], doc["step"],
                     (graph_from_json(cand["G"]), cand["k"]) if cand else None,
                     doc.get("diagnostics", {}), doc.get("attrition", []))
    return LinkReport.from_json(doc)
