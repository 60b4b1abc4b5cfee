import pytest

from recolor import families as fam
from recolor.census import partition_oracle
from recolor.coloring import build_coloring_graph
from recolor.errors import NotALinkVertex
from recolor.link import algorithm1
from recolor.partition import PartitionCache, algorithm2, check_candidate, set_partitions


@pytest.fixture(scope="module")
def paw4():
    lcg = build_coloring_graph(fam.paw(), 4)  # paw vertex i is v_{i+1}; v_1 is the pendant
    return lcg, algorithm1(lcg.skeleton)


def _base_names(lcg, rep, alpha):
    prof = rep.per_alpha[alpha]
    return {qi: lcg.label(alpha, q[0]).vertex for qi, q in enumerate(prof.cliques)}


def _as_base(lcg, rep, alpha, part):
    names = _base_names(lcg, rep, alpha)
    return sorted(sorted(tuple(sorted(names[q] for q in p)) for p in comp) for comp in part.parts)


def _blocks(lcg, rep, alpha, base_blocks):
    inv = {v: q for q, v in _base_names(lcg, rep, alpha).items()}
    return tuple(frozenset(inv[v] for v in b) for b in base_blocks)


def test_set_partitions_counts():
    # Stirling numbers of the second kind
    assert len(set_partitions(range(4), 2)) == 7
    assert len(set_partitions(range(5), 3)) == 25
    assert len(set_partitions(range(3), 4)) == 0
    parts = set_partitions("abc", 2, allowed=lambda b, x: not ("a" in b and x == "b"))
    assert {frozenset("a"), frozenset("bc")} in [set(p) for p in parts]
    assert all(frozenset("ab") not in p for p in parts)


def test_paw_partition(paw4):
    lcg, rep = paw4
    a = lcg.vertex_of((1, 2, 3, 1))
    part = algorithm2(lcg.skeleton, rep, a)
    assert _as_base(lcg, rep, a, part) == [[(0, 3), (1,), (2,)]]
    assert part.colors == ((2, 3, 4),) and part.free == (1,) and part.chi == (3,)
    assert part.candidates[0][1] == 1


def test_paw_rejected_candidates(paw4):
    lcg, rep = paw4
    c = lcg.skeleton
    a = lcg.vertex_of((1, 2, 3, 1))
    res = check_candidate(c, rep, a, 0, _blocks(lcg, rep, a, [(1, 2), (0,), (3,)]))
    assert not res.ok and res.reason == "step4"
    res = check_candidate(c, rep, a, 0, _blocks(lcg, rep, a, [(0, 2), (1,), (3,)]))
    assert not res.ok and res.reason.startswith("step5")
    fates = {}
    names = _base_names(lcg, rep, a)
    for block, antipode, status in res.parts:
        fates[tuple(sorted(names[q] for q in block))] = (lcg.colorings[antipode], status)
    assert fates[(0, 2)] == ((4, 2, 4, 1), "step5-no-common-color")
    assert fates[(3,)] == ((1, 2, 3, 4), "step5-not-link")
    assert fates[(1,)][1] == "ok"
    res = check_candidate(c, rep, a, 0, _blocks(lcg, rep, a, [(0, 3), (1,), (2,)]))
    assert res.ok


def test_p3_and_n2():
    lcg = build_coloring_graph(fam.path(3), 3)
    rep = algorithm1(lcg.skeleton)
    a = lcg.vertex_of((1, 2, 1))
    assert _as_base(lcg, rep, a, algorithm2(lcg.skeleton, rep, a)) == [[(0, 2), (1,)]]
    lcg = build_coloring_graph(fam.empty(2), 2)
    rep = algorithm1(lcg.skeleton)
    a = lcg.vertex_of((1, 2))
    assert _as_base(lcg, rep, a, algorithm2(lcg.skeleton, rep, a)) == [[(0,)], [(1,)]]


def test_non_link_vertex(paw4):
    lcg, rep = paw4
    with pytest.raises(NotALinkVertex):
        algorithm2(lcg.skeleton, rep, lcg.vertex_of((1, 2, 3, 4)))


def test_matches_phi_everywhere(catalog):
    for name, g, k in catalog:
        lcg = build_coloring_graph(g, k)
        rep = algorithm1(lcg.skeleton)
        cache = PartitionCache(lcg.skeleton, rep)
        for a in rep.A:
            part = cache.partition(a)
            assert _as_base(lcg, rep, a, part) == sorted(partition_oracle(g, lcg.colorings[a])), (name, a)
            assert all(s == 1 for _, s in part.candidates)


def test_partition_json(paw4):
    lcg, rep = paw4
    doc = algorithm2(lcg.skeleton, rep, rep.anchor).to_json()
    assert doc["kind"] == "partition"
    assert doc["components"][0]["chi"] == 3
