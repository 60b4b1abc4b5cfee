import pytest

from recolor import families as fam
from recolor.coloring import coloring_graph
from recolor.errors import BudgetExceeded
from recolor.graph import SimpleGraph, disjoint_union
from recolor.iso import canonical_certificate, graph_isomorphic, is_isomorphic


def _check_witness(a, b, phi):
    assert sorted(phi) == list(range(a.n))
    for u, v in a.edges:
        assert b.has_edge(phi[u], phi[v])
    assert a.m == b.m


def test_witnesses():
    phi = graph_isomorphic(fam.townhouse(1), fam.house())
    assert phi is not None
    _check_witness(fam.townhouse(1), fam.house(), phi)
    phi = graph_isomorphic(fam.path(3), fam.complete_bipartite(1, 2))
    _check_witness(fam.path(3), fam.complete_bipartite(1, 2), phi)
    assert graph_isomorphic(fam.cycle(6), disjoint_union(fam.complete(3), fam.complete(3))) is None


def test_certificates():
    assert canonical_certificate(fam.path(3)) == canonical_certificate(fam.complete_bipartite(1, 2))
    assert canonical_certificate(fam.cycle(5)) != canonical_certificate(fam.path(5))
    six_p3 = disjoint_union(*[fam.path(3)] * 6)
    assert canonical_certificate(coloring_graph(fam.townhouse(1), 3)) == canonical_certificate(six_p3)


def test_regular_hard_pairs():
    # same degree sequence, not isomorphic
    c6 = fam.cycle(6)
    two_c3 = disjoint_union(fam.complete(3), fam.complete(3))
    assert canonical_certificate(c6) != canonical_certificate(two_c3)
    k33 = fam.complete_bipartite(3, 3)
    # the 3-prism is 3-regular on six vertices but has triangles
    prism = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert not is_isomorphic(k33, prism)
    assert canonical_certificate(k33) != canonical_certificate(prism)


def test_budget_is_enforced():
    big = coloring_graph(fam.cycle(5), 4)
    with pytest.raises(BudgetExceeded):
        graph_isomorphic(big, big.permuted(list(reversed(range(big.n)))), budget=1)
