import pytest

from recolor import families as fam
from recolor.coloring import build_coloring_graph, link_colorings, strip_labels
from recolor.errors import NotALinkVertex
from recolor.graph import chromatic_number
from recolor.iso import is_isomorphic
from recolor.link import (LinkReport, algorithm1, clique_neighborhood, is_abstract_link_vertex,
                          report_from_json, spanning_square_count, vertex_profile)


@pytest.fixture(scope="module")
def p3():
    return build_coloring_graph(fam.path(3), 3)


@pytest.fixture(scope="module")
def c55():
    return build_coloring_graph(fam.cycle(5), 5)


def _clique_of(lcg, alpha, dec, base_vertex):
    for i, q in enumerate(dec.cliques):
        if lcg.label(alpha, q[0]).vertex == base_vertex:
            return i
    raise AssertionError(base_vertex)


def test_clique_neighborhood(p3, c55):
    a = p3.vertex_of((1, 2, 1))
    dec = clique_neighborhood(p3.skeleton, a)
    assert sorted(dec.sizes) == [1, 1, 1]
    b = c55.vertex_of((1, 2, 3, 1, 2))
    # v_1 and v_5 see a repeated color, so they have three free colors, the others two
    assert sorted(clique_neighborhood(c55.skeleton, b).sizes) == [2, 2, 2, 3, 3]
    k3 = build_coloring_graph(fam.complete(3), 3).skeleton
    assert clique_neighborhood(k3, 0).cliques == ()


def test_clique_neighborhood_rejects_non_cliques():
    # a vertex whose neighbourhood component is a path, not a clique
    assert clique_neighborhood(fam.complete_bipartite(1, 3).permuted([0, 1, 2, 3]), 0) is not None
    assert clique_neighborhood(fam.cone(fam.path(3)), 3) is None


def test_spanning_squares(p3, c55):
    b = c55.vertex_of((1, 2, 3, 1, 2))
    dec = clique_neighborhood(c55.skeleton, b)
    q0, q1, q2, q3 = (_clique_of(c55, b, dec, v) for v in (0, 1, 2, 3))
    # free sets {4,5} and {4,5}: only the crossed pairs are proper
    assert spanning_square_count(c55.skeleton, dec, q1, q2) == 2
    assert spanning_square_count(c55.skeleton, dec, q1, q3) == 4
    # {3,4,5} against {4,5}
    assert spanning_square_count(c55.skeleton, dec, q0, q1) == 4
    a = p3.vertex_of((1, 2, 1))
    dec = clique_neighborhood(p3.skeleton, a)
    u, w = _clique_of(p3, a, dec, 0), _clique_of(p3, a, dec, 2)
    assert spanning_square_count(p3.skeleton, dec, u, w) == 1
    with pytest.raises(ValueError):
        spanning_square_count(p3.skeleton, dec, u, u)


def test_algorithm1_p3(p3):
    rep = algorithm1(strip_labels(p3, 11))
    assert rep.ok and rep.k == 3 and len(rep.A) == 6
    assert is_isomorphic(rep.G, fam.path(3))
    assert rep.n == 3 and rep.m == 2 and rep.f == 1


def test_algorithm1_paw():
    rep = algorithm1(strip_labels(build_coloring_graph(fam.paw(), 4), 3))
    assert rep.ok and rep.k == 4 and is_isomorphic(rep.G, fam.paw())


def test_algorithm1_aborts_on_6p4():
    rep = algorithm1(fam.parse_name("6*P4"))
    assert not rep.ok
    assert rep.step == 8 and rep.stage == "iso-check-failed"
    g, k = rep.candidate
    assert k == 3 and is_isomorphic(g, fam.path(2))
    # 6P4 is the coloring graph of K_2 bridged to K_3
    cg = build_coloring_graph(fam.bridged_k2_k3(), 3).skeleton
    assert is_isomorphic(cg, fam.parse_name("6*P4"))


def test_algorithm1_no_candidates():
    rep = algorithm1(fam.empty(6))
    assert not rep.ok and rep.stage == "no-candidates"
    assert rep.to_json()["kind"] == "abort"


def test_link_vertex_membership(p3, c55):
    c = p3.skeleton
    assert is_abstract_link_vertex(c, p3.vertex_of((1, 2, 1)))
    assert not is_abstract_link_vertex(c, p3.vertex_of((1, 2, 3)))
    assert not is_abstract_link_vertex(c55.skeleton, c55.vertex_of((1, 2, 3, 4, 2)))


def test_bijection_and_profiles(catalog):
    for name, g, k in catalog:
        lcg = build_coloring_graph(g, k)
        rep = algorithm1(lcg.skeleton)
        want = {lcg.vertex_of(col) for col in link_colorings(g, k)}
        assert set(rep.A) == want, name
        for a in rep.A:
            prof = rep.per_alpha[a]
            assert prof.m == g.m
            assert is_isomorphic(prof.base_graph(), g)
        # per component, the common free colors number k - chi
        prof = rep.per_alpha[rep.anchor]
        for comp, sels in zip(prof.components, prof.selections):
            h = prof.base_graph().induced(sorted(comp))
            assert len(sels) == k - chromatic_number(h)


def test_report_json_round_trip(p3):
    rep = algorithm1(p3.skeleton)
    back = report_from_json(rep.to_json())
    assert isinstance(back, LinkReport)
    assert back.A == rep.A and back.k == rep.k and back.G == rep.G
    assert back.per_alpha[rep.anchor].selections == rep.per_alpha[rep.anchor].selections
    with pytest.raises(NotALinkVertex):
        rep.profile(p3.vertex_of((1, 2, 3)))


def test_vertex_profile_none_off_structure():
    assert vertex_profile(fam.cone(fam.path(3)), 3) is None
