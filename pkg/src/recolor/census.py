"""Exhaustive checks of the countable claims, plus the Phi-based oracles they rely on.

Every ``verify_*`` function returns a plain JSON-able report::

    {"suite": ..., "passed": bool, "checks": [{"name", "passed", ...}], "budgets": {...}}
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, permutations, product

from . import families as fam
from .coloring import (Coloring, build_coloring_graph, default_cap, is_link_coloring,
                       strip_labels, strip_permutation)
from .errors import BudgetExceeded, RecolorError
from .graph import SimpleGraph, chromatic_number, connected_components, disjoint_union
from .io import from_graph6, to_graph6
from .iso import canonical_certificate, default_budget, graph_isomorphic
from .link import algorithm1
from .llg import EdgeLabel, LabeledLinkGraph, algorithm3, degree_formula, label_isomorphic
from .partition import PartitionCache

DEFAULT_SEEDS = (0, 1, 2)


def default_catalog():
    return [
        ("P2", fam.path(2), 3),
        ("P3", fam.path(3), 3),
        ("P3", fam.path(3), 4),
        ("C5", fam.cycle(5), 4),
        ("C5", fam.cycle(5), 5),
        ("paw", fam.paw(), 4),
        ("K3", fam.complete(3), 4),
        ("N2", fam.empty(2), 2),
        ("K2+K3", disjoint_union(fam.complete(2), fam.complete(3)), 4),
        ("TH1", fam.townhouse(1), 4),
    ]


def _check(name, passed, **details):
    return {"name": name, "passed": bool(passed), **details}


def _report(suite, checks, **extra):
    return {
        "suite": suite,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
        "budgets": {"iso_nodes": default_budget(), "colorings": default_cap()},
        **extra,
    }


# -- small graph enumeration -------------------------------------------------


@lru_cache(maxsize=None)
def graphs_on(n: int) -> tuple:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Each class on n vertices contains a graph whose last vertex can be deleted
    to give a class on n-1 vertices, so adding a vertex to every smaller
    representative in every possible way and keeping one graph per
    certificate reaches every class.
    """
    if n == 0:
        return (SimpleGraph(0),)
    seen = {}
    for base in graphs_on(n - 1):
        for r in range(n):
            for nb in combinations(range(n - 1), r):
                g = SimpleGraph.from_edges(n, list(base.edges) + [(u, n - 1) for u in nb])
                cert = canonical_certificate(g)
                if cert not in seen:
                    seen[cert] = g
    return tuple(seen[c] for c in sorted(seen))


def graphs_up_to(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from graphs_on(n)


# -- oracles built from Phi ----------------------------------------------------


def link_vertex_oracle(lcg) -> set:
    g, k = lcg.base, lcg.k
    return {i for i, col in enumerate(lcg.colorings) if is_link_coloring(g, Coloring(col, k))}


def partition_oracle(g: SimpleGraph, coloring) -> list:
    """Per component (ordered by min vertex), its color classes as sorted tuples, sorted."""
    out = []
    for comp in connected_components(g):
        classes = {}
        for v in sorted(comp):
            classes.setdefault(coloring[v], []).append(v)
        out.append(sorted(tuple(c) for c in classes.values()))
    return out


def orbit_oracle(g: SimpleGraph, k: int, coloring) -> set:
    """Orbit of ``coloring`` under independent palette permutations per component."""
    comps = connected_components(g)
    owner = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            owner[v] = i
    out = set()
    perms = list(permutations(range(1, k + 1)))
    for sigma in product(perms, repeat=len(comps)):
        out.add(tuple(sigma[owner[v]][coloring[v] - 1] for v in range(g.n)))
    return out


def llg_oracle(lcg, orig_alpha: int, rename=None) -> LabeledLinkGraph:
    """Labeled link graph straight from Phi, colors being the true palette ids.

    ``rename`` maps original coloring-graph ids to the ids of a stripped copy.
    """
    rename = rename or (lambda v: v)
    g, k = lcg.base, lcg.k
    alpha = lcg.colorings[orig_alpha]
    parts = []
    for i, comp in enumerate(connected_components(g)):
        classes = {}
        for v in sorted(comp):
            classes.setdefault(alpha[v], []).append(v)
        for j, cls in enumerate(sorted(classes.values())):
            parts.append(((i, j), cls))
    members = {}
    for col in orbit_oracle(g, k, alpha):
        members[rename(lcg.vertex_of(col))] = col
    edges = {}
    for u, v in combinations(sorted(members), 2):
        cu, cv = members[u], members[v]
        diff = [(p, cls) for p, cls in parts if cu[cls[0]] != cv[cls[0]]]
        if len(diff) == 1:
            p, cls = diff[0]
            edges[(u, v)] = EdgeLabel(cu[cls[0]], p, cv[cls[0]])
    return LabeledLinkGraph(frozenset(members), edges, rename(orig_alpha), None, k)


# -- suites --------------------------------------------------------------------


def path_constraint_count(n: int) -> int:
    """3-colorings of u_1..u_{n+1} (a path) with c(u_i) != i mod 3 (residues as 1, 2, 3)."""
    total = 0
    for col in product((1, 2, 3), repeat=n + 1):
        if any(col[i] == col[i + 1] for i in range(n)):
            continue
        if all(col[i - 1] != ((i - 1) % 3) + 1 for i in range(1, n + 2)):
            total += 1
    return total


def verify_townhouse(n_max: int = 5, basement_max: int = 3) -> dict:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    checks = []
    for n in range(1, n_max + 1):
        cg = build_coloring_graph(fam.townhouse(n), 3).skeleton
        target = disjoint_union(*[fam.path(n + 2)] * 6)
        checks.append(_check(f"TH{n} count", cg.n == 6 * (n + 2), vertices=cg.n, expected=6 * (n + 2)))
        checks.append(_check(f"TH{n} is 6*P{n + 2}", canonical_certificate(cg) == canonical_certificate(target)))
    t = [path_constraint_count(n) for n in range(1, n_max + 1)]
    checks.append(_check("t_n recursion", t[0] == 3 and all(b == a + 1 for a, b in zip(t, t[1:])), t=t))
    for n in range(1, basement_max + 1):
        cg = build_coloring_graph(fam.basement_townhouse(n), 3).skeleton
        checks.append(_check(f"basement TH{n} edgeless", cg.n == 6 * (n + 2) and cg.m == 0,
                             vertices=cg.n, edges=cg.m))
    return _report("townhouse", checks)


def _edgeless_check(name, g, k, count):
    cg = build_coloring_graph(g, k).skeleton
    return _check(name, cg.n == count and cg.m == 0, vertices=cg.n, edges=cg.m, expected=count)


def verify_chi_collisions() -> dict:
    checks = [
        _edgeless_check("C3(K3) = N6", fam.complete(3), 3, 6),
        _edgeless_check("C3(K4-e) = N6", fam.parse_name("K4-e"), 3, 6),
        _check("C3(paw) = 6*K2", canonical_certificate(build_coloring_graph(fam.paw(), 3).skeleton)
               == canonical_certificate(disjoint_union(*[fam.complete(2)] * 6))),
        _edgeless_check("C3(F2) = N12", fam.friendship(2), 3, 12),
        _edgeless_check("C3(basement TH2) = N24", fam.basement_townhouse(2), 3, 24),
        _edgeless_check("C4(K4) = N24", fam.complete(4), 4, 24),
        _edgeless_check("C4(cone basement TH2) = N96", fam.cone(fam.basement_townhouse(2)), 4, 96),
        # a disconnected 3-chromatic graph against connected ones
        _edgeless_check("C3(K3+K3) = N36", disjoint_union(fam.complete(3), fam.complete(3)), 3, 36),
        _edgeless_check("C3(basement TH4) = N36", fam.basement_townhouse(4), 3, 36),
        _edgeless_check("C3(K3+basement TH2) = N144",
                        disjoint_union(fam.complete(3), fam.basement_townhouse(2)), 3, 144),
        _edgeless_check("C4(cone basement TH4) = N144", fam.cone(fam.basement_townhouse(4)), 4, 144),
    ]
    checks.append(_check("chromatic numbers", [
        chromatic_number(fam.basement_townhouse(2)), chromatic_number(fam.complete(4)),
        chromatic_number(fam.cone(fam.basement_townhouse(4))),
    ] == [3, 4, 4]))
    return _report("collisions", checks)


def verify_c3c5_unique(n_max: int = 5) -> dict:
    if n_max > 7:
        raise ValueError("n_max above 7 is outside the budget")
    target = build_coloring_graph(fam.cycle(5), 3).skeleton
    tcert = canonical_certificate(target)
    matches, excluded, checked = [], [], 0
    for g in graphs_up_to(n_max):
        checked += 1
        k = chromatic_number(g)
        try:
            cg = build_coloring_graph(g, k, cap=target.n)
        except BudgetExceeded:
            continue  # more colorings than the target has vertices
        if cg.skeleton.n != target.n or cg.skeleton.m != target.m:
            continue
        try:
            if canonical_certificate(cg.skeleton) == tcert:
                matches.append({"graph6": to_graph6(g), "chi": k})
        except BudgetExceeded as exc:
            excluded.append({"graph6": to_graph6(g), "reason": str(exc)})
    sole_c5 = len(matches) == (1 if n_max >= 5 else 0)
    if matches:
        sole_c5 = sole_c5 and graph_isomorphic(fam.cycle(5), from_graph6(matches[0]["graph6"])) is not None
    checks = [
        _check("target is 2*C15", tcert == canonical_certificate(disjoint_union(fam.cycle(15), fam.cycle(15))),
               vertices=target.n),
        _check("C5 is the only match", sole_c5, matches=matches),
        _check("matches are 3-chromatic", all(m["chi"] == 3 for m in matches)),
        _check("no budget exclusions", not excluded, excluded=excluded),
    ]
    return _report("c3c5", checks, graphs_checked=checked)


def _strip_maps(n, seed):
    perm = strip_permutation(n, seed)
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    return perm, inv


def roundtrip_case(name, g, k, seeds=DEFAULT_SEEDS, deep=True) -> dict:
    """Strip, reconstruct, and compare every stage to its Phi oracle."""
    t0 = time.perf_counter()
    lcg = build_coloring_graph(g, k)
    truth_links = link_vertex_oracle(lcg)
    out = {"name": name, "k": k, "vertices": lcg.skeleton.n, "link_count": len(truth_links), "seeds": []}
    ok_all = True
    for seed in seeds:
        perm, inv = _strip_maps(lcg.skeleton.n, seed)
        c = strip_labels(lcg, seed)
        rep = algorithm1(c)
        row = {"seed": seed, "ok": rep.ok}
        if not rep.ok:
            row["abort"] = rep.stage
            ok_all = False
            out["seeds"].append(row)
            continue
        row["G_matches"] = graph_isomorphic(rep.G, g) is not None
        row["k_matches"] = rep.k == k
        row["A_size"] = len(rep.A)
        row["A_is_link_set"] = set(rep.A) == {perm[v] for v in truth_links}
        good = row["G_matches"] and row["k_matches"] and row["A_is_link_set"]
        if deep:
            pc = check_partitions(lcg, c, rep, inv)
            lc = check_llg(lcg, c, rep, perm, inv)
            row.update(partitions=pc, llg=lc)
            good = good and pc["passed"] and lc["passed"]
        row["passed"] = good
        ok_all = ok_all and good
        out["seeds"].append(row)
    out["passed"] = ok_all
    out["seconds"] = round(time.perf_counter() - t0, 3)
    return out


def check_partitions(lcg, c, rep, inv) -> dict:
    cache = PartitionCache(c, rep)
    bad, extra_survivors = [], 0
    for a in sorted(rep.A):
        part = cache.partition(a)
        prof = rep.per_alpha[a]
        o = inv[a]
        base = {qi: lcg.label(o, inv[q[0]]).vertex for qi, q in enumerate(prof.cliques)}
        got = sorted(sorted(tuple(sorted(base[q] for q in p)) for p in comp) for comp in part.parts)
        want = sorted(partition_oracle(lcg.base, lcg.colorings[o]))
        if got != want:
            bad.append(a)
        extra_survivors += sum(s != 1 for _, s in part.candidates)
    return {"passed": not bad and not extra_survivors, "mismatches": bad[:10],
            "checked": len(rep.A), "non_unique": extra_survivors}


def check_llg(lcg, c, rep, perm, inv, all_anchors=False) -> dict:
    cache = PartitionCache(c, rep)
    remaining = set(rep.A)
    classes = []
    ok = True
    while remaining:
        a = min(remaining)
        llg = algorithm3(c, rep, a, cache)
        truth = llg_oracle(lcg, inv[a], rename=lambda v: perm[v])
        chis = llg.partition.chi
        want_deg = degree_formula(chis, rep.k)
        model = build_coloring_graph(disjoint_union(*[fam.complete(x) for x in chis]), rep.k).skeleton
        row = {
            "anchor": a,
            "size": len(llg.vertices),
            "orbit_match": llg.vertices == truth.vertices,
            "edges_match": set(llg.edges) == set(truth.edges),
            "degree_ok": all(d == want_deg for d in llg.degrees().values()),
            "shape_ok": graph_isomorphic(llg.skeleton(), model) is not None,
            "labels_ok": label_isomorphic(llg, truth),
        }
        anchors = sorted(llg.vertices) if all_anchors else [max(llg.vertices)]
        row["reanchor_ok"] = all(
            label_isomorphic(llg, algorithm3(c, rep, b, cache)) for b in anchors if b != a
        )
        row_ok = all(v for kk, v in row.items() if kk.endswith(("_ok", "_match")))
        ok = ok and row_ok
        classes.append(row)
        remaining -= llg.vertices
    return {"passed": ok, "classes": classes}


def _run_case(args):
    name, g, k, seeds, deep = args
    try:
        return roundtrip_case(name, g, k, seeds, deep)
    except RecolorError as exc:
        return {"name": name, "k": k, "passed": False, "error": f"{type(exc).__name__}: {exc}"}


def verify_roundtrip(catalog=None, seeds=DEFAULT_SEEDS, jobs: int = 1, deep: bool = True) -> dict:
    catalog = default_catalog() if catalog is None else catalog
    work = [(name, g, k, tuple(seeds), deep) for name, g, k in catalog]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_run_case, work))
    else:
        rows = [_run_case(w) for w in work]
    checks = [_check(f"({r['name']},{r['k']})", r["passed"], **{k: v for k, v in r.items() if k not in ("passed", "name")})
              for r in rows]
    return _report("roundtrip", checks)


def verify_no_surplus_chi_collision(n_max: int = 4, k_extra: int = 2, run_algorithm: bool = True,
                                    algo_n_max: int | None = None) -> dict:
    if n_max > 5 or k_extra > 2:
        raise ValueError("n_max <= 5 and k_extra <= 2 are the supported budgets")
    algo_n_max = n_max if algo_n_max is None else algo_n_max
    chi_certs, surplus_certs = {}, {}
    excluded = []
    successes = []
    for g in graphs_up_to(max(n_max, algo_n_max)):
        chi = chromatic_number(g)
        try:
            cg = build_coloring_graph(g, chi).skeleton
        except BudgetExceeded as exc:
            excluded.append({"graph6": to_graph6(g), "k": chi, "reason": str(exc)})
            continue
        if g.n <= n_max:
            chi_certs.setdefault(canonical_certificate(cg), to_graph6(g))
        if run_algorithm and g.n <= algo_n_max:
            rep = algorithm1(cg)
            if rep.ok:
                successes.append(to_graph6(g))
        if g.n > n_max:
            continue
        for k in range(chi + 1, chi + k_extra + 1):
            try:
                sg = build_coloring_graph(g, k).skeleton
                surplus_certs.setdefault(canonical_certificate(sg), (to_graph6(g), k))
            except BudgetExceeded as exc:
                excluded.append({"graph6": to_graph6(g), "k": k, "reason": str(exc)})
    common = set(chi_certs) & set(surplus_certs)
    c3c5 = canonical_certificate(build_coloring_graph(fam.cycle(5), 3).skeleton)
    checks = [
        _check("certificate sets disjoint", not common,
               chi_level=len(chi_certs), surplus=len(surplus_certs),
               collisions=[(chi_certs[x], surplus_certs[x]) for x in common]),
        _check("C3(C5) in no surplus set", c3c5 not in surplus_certs),
    ]
    if run_algorithm:
        checks.append(_check("reconstruction never succeeds at chi level", not successes,
                             successes=successes, max_vertices=algo_n_max))
    checks.append(_check("no budget exclusions", not excluded, excluded=excluded))
    return _report("no-collision", checks)


SUITES = {
    "townhouse": lambda jobs: verify_townhouse(5),
    "collisions": lambda jobs: verify_chi_collisions(),
    "c3c5": lambda jobs: verify_c3c5_unique(5),
    "roundtrip": lambda jobs: verify_roundtrip(jobs=jobs),
    "no-collision": lambda jobs: verify_no_surplus_chi_collision(4, 2, algo_n_max=5),
}


def run_suite(name: str, jobs: int = 1) -> dict:
    if name == "all":
        reports = [SUITES[s](jobs) for s in SUITES]
        return {"suite": "all", "passed": all(r["passed"] for r in reports), "reports": reports}
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name](jobs)


def cpu_jobs() -> int:
    return os.cpu_count() or 1
