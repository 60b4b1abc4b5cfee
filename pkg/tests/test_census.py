import json

import networkx as nx
import pytest

from recolor import census
from recolor import families as fam
from recolor.coloring import build_coloring_graph
from recolor.graph import disjoint_union
from recolor.io import from_graph6
from recolor.iso import is_isomorphic


def test_graph_counts():
    assert [len(census.graphs_on(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_graph_classes_are_distinct_by_networkx():
    gs = census.graphs_on(5)
    nxs = []
    for g in gs:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        nxs.append(h)
    for i in range(len(nxs)):
        for j in range(i + 1, len(nxs)):
            assert not nx.is_isomorphic(nxs[i], nxs[j])


def test_townhouse_report():
    rep = census.verify_townhouse(5)
    assert rep["passed"]
    counts = [c["vertices"] for c in rep["checks"] if c["name"].endswith("count")]
    assert counts == [18, 24, 30, 36, 42]
    with pytest.raises(ValueError):
        census.verify_townhouse(0)


def test_collisions_report():
    rep = census.verify_chi_collisions()
    assert rep["passed"], [c for c in rep["checks"] if not c["passed"]]


def test_paw_is_not_edgeless_at_three():
    # the paw has 12 proper 3-colorings pairing up along the pendant
    cg = build_coloring_graph(fam.paw(), 3).skeleton
    assert (cg.n, cg.m) == (12, 6)


def test_c3c5_report():
    rep = census.verify_c3c5_unique(5)
    assert rep["passed"]
    matches = [c for c in rep["checks"] if c["name"] == "C5 is the only match"][0]["matches"]
    assert len(matches) == 1 and matches[0]["chi"] == 3
    assert is_isomorphic(from_graph6(matches[0]["graph6"]), fam.cycle(5))
    rep3 = census.verify_c3c5_unique(3)
    assert rep3["passed"]
    with pytest.raises(ValueError):
        census.verify_c3c5_unique(8)


def test_orbit_oracle():
    orb = census.orbit_oracle(fam.cycle(5), 5, (1, 2, 3, 1, 2))
    assert len(orb) == 60
    two = census.orbit_oracle(disjoint_union(fam.complete(2), fam.complete(3)), 4, (1, 2, 1, 2, 3))
    assert len(two) == 12 * 24


def test_roundtrip_small_catalog_report_is_deterministic():
    cat = [("P3", fam.path(3), 3), ("paw", fam.paw(), 4)]
    a = census.verify_roundtrip(cat, seeds=(0, 1))
    b = census.verify_roundtrip(cat, seeds=(0, 1))
    assert a["passed"]
    strip = lambda r: json.dumps([{k: v for k, v in c.items() if k != "seconds"} for c in r["checks"]])
    assert strip(a) == strip(b)
    assert a["budgets"]["iso_nodes"] == 10**7


def test_roundtrip_reports_errors_as_failures():
    rep = census.verify_roundtrip([("K3 at chi", fam.complete(3), 3)], seeds=(0,))
    assert not rep["passed"]


def test_no_collision_limits():
    with pytest.raises(ValueError):
        census.verify_no_surplus_chi_collision(6, 2)


def test_unknown_suite():
    with pytest.raises(ValueError):
        census.run_suite("everything")
