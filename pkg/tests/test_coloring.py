import pytest

from conftest import brute_colorings, brute_link_count
from recolor import families as fam
from recolor.coloring import (Coloring, build_coloring_graph, enumerate_colorings, free_colors,
                              hypercube_from_corner, is_link_coloring, is_weak_link_coloring,
                              link_colorings, strip_labels)
from recolor.errors import BudgetExceeded, PreconditionError, SurplusViolation
from recolor.graph import connected_components, find_induced_c5
from recolor.iso import canonical_certificate, is_isomorphic

# sample colorings of C_5, vertices in cycle order
ALPHA = (1, 2, 3, 1, 2)
BETA = (1, 2, 3, 4, 2)
DELTA = (1, 2, 3, 4, 2, 1)  # C_5 plus a pendant on the vertex colored 3


def test_coloring_validates():
    assert str(Coloring((1, 2, 1), 3)) == "121"
    with pytest.raises(ValueError):
        Coloring((0, 1), 3)
    with pytest.raises(ValueError):
        Coloring((4,), 3)


@pytest.mark.parametrize("g, k, count", [
    (fam.path(3), 3, 12), (fam.townhouse(3), 3, 30), (fam.complete(3), 2, 0),
])
def test_enumerate_counts(g, k, count):
    assert len(enumerate_colorings(g, k)) == count


def test_enumerate_is_lexicographic():
    cols = enumerate_colorings(fam.path(3), 3)
    assert cols == sorted(cols)
    assert cols == brute_colorings(3, list(fam.path(3).edges), 3)


def test_enumerate_cap():
    with pytest.raises(BudgetExceeded):
        enumerate_colorings(fam.empty(4), 4, cap=10)


def test_build_examples():
    c = build_coloring_graph(fam.cycle(5), 3).skeleton
    assert (c.n, c.m) == (30, 30)
    comps = connected_components(c)
    assert len(comps) == 2
    for comp in comps:
        assert is_isomorphic(c.induced(comp), fam.cycle(15))
    assert is_isomorphic(build_coloring_graph(fam.path(2), 3).skeleton, fam.cycle(6))
    assert is_isomorphic(build_coloring_graph(fam.empty(1), 4).skeleton, fam.complete(4))


def test_edges_and_labels_follow_phi():
    lcg = build_coloring_graph(fam.paw(), 4)
    cols = lcg.colorings
    for u in range(lcg.skeleton.n):
        for v in range(u + 1, lcg.skeleton.n):
            diff = [x for x in range(4) if cols[u][x] != cols[v][x]]
            assert lcg.skeleton.has_edge(u, v) == (len(diff) == 1)
            if len(diff) == 1:
                lab = lcg.label(u, v)
                assert (lab.vertex, lab.before, lab.after) == (diff[0], cols[u][diff[0]], cols[v][diff[0]])
                back = lcg.label(v, u)
                assert (back.before, back.after) == (lab.after, lab.before)
    assert lcg.vertex_of(cols[7]) == 7
    assert str(lcg.label(lcg.vertex_of((1, 2, 3, 1)), lcg.vertex_of((4, 2, 3, 1)))) == "1v04"


def test_strip():
    lcg = build_coloring_graph(fam.path(3), 3)
    s = strip_labels(lcg, 5)
    assert (s.n, s.m) == (12, 15)
    assert is_isomorphic(s, lcg.skeleton)
    assert canonical_certificate(strip_labels(lcg, 1)) == canonical_certificate(strip_labels(lcg, 2))
    assert strip_labels(lcg, 9) == strip_labels(lcg, 9)


def test_free_colors():
    c5, k5 = fam.cycle(5), 5
    assert free_colors(c5, Coloring(BETA, k5), 0) == {3, 4, 5}
    assert free_colors(fam.complete(3), Coloring((1, 2, 3), 3), 1) == frozenset()
    assert free_colors(fam.pendant_c5(), Coloring(DELTA, 4), 2) == frozenset()
    assert free_colors(fam.pendant_c5(), Coloring(DELTA, 4), 5) == {2, 4}


def test_link_colorings():
    c5 = fam.cycle(5)
    assert is_link_coloring(c5, Coloring(ALPHA, 5))
    assert not is_link_coloring(c5, Coloring(BETA, 5))
    assert is_link_coloring(fam.empty(2), Coloring((1, 1), 2))
    with pytest.raises(SurplusViolation):
        is_link_coloring(c5, Coloring(ALPHA, 3))


def test_weak_link_colorings():
    c5 = fam.cycle(5)
    assert is_weak_link_coloring(c5, Coloring(BETA, 5))
    assert is_weak_link_coloring(c5, Coloring(ALPHA, 5))
    assert not is_weak_link_coloring(c5, Coloring(BETA, 4))
    for col in link_colorings(fam.paw(), 4):
        assert is_weak_link_coloring(fam.paw(), Coloring(col, 4))


@pytest.mark.parametrize("g, k, count", [
    (fam.cycle(5), 5, 300), (fam.paw(), 4, 48), (fam.path(3), 3, 6), (fam.path(2), 3, 6),
])
def test_link_counts(g, k, count):
    # frozen from the naive oracle in conftest
    assert len(link_colorings(g, k)) == count
    assert brute_link_count(g.n, list(g.edges), k) == count


def test_hypercube_from_corner():
    lcg = build_coloring_graph(fam.path(3), 3)
    c = lcg.skeleton
    corner = lcg.vertex_of((1, 2, 1))
    dims = [lcg.vertex_of((3, 2, 1)), lcg.vertex_of((1, 2, 3))]
    cube = hypercube_from_corner(c, corner, dims)
    assert lcg.colorings[cube.antipode] == (3, 2, 3)
    assert cube.layer_map[frozenset()] == corner
    assert sorted(lcg.colorings[v] for v in cube.antipode_neighbors()) == [(1, 2, 3), (3, 2, 1)]
    one = hypercube_from_corner(c, corner, dims[:1])
    assert one.antipode == dims[0]


def test_hypercube_absent_for_adjacent_vertices():
    lcg = build_coloring_graph(fam.path(3), 3)
    corner = lcg.vertex_of((1, 2, 1))
    dims = [lcg.vertex_of((3, 2, 1)), lcg.vertex_of((1, 3, 1))]
    assert hypercube_from_corner(lcg.skeleton, corner, dims) is None


def test_hypercube_rejects_non_neighbors():
    lcg = build_coloring_graph(fam.path(3), 3)
    with pytest.raises(PreconditionError):
        hypercube_from_corner(lcg.skeleton, 0, [0])


def test_no_induced_c5_in_catalog(catalog):
    for _, g, k in catalog:
        assert find_induced_c5(build_coloring_graph(g, k).skeleton) is None
