import json

import pytest

from recolor import families as fam
from recolor.io import (FormatError, from_graph6, graph_from_json, graph_to_json, parse_document,
                        to_dot, to_graph6)
from recolor.iso import is_isomorphic


def test_json_round_trip():
    g = fam.townhouse(2)
    doc = json.loads(json.dumps(graph_to_json(g)))
    assert doc["kind"] == "graph"
    assert graph_from_json(doc) == g


def test_graph6_round_trip():
    for g in (fam.cycle(5), fam.townhouse(3), fam.empty(3), fam.complete(7)):
        assert from_graph6(to_graph6(g)) == g
    assert to_graph6(fam.cycle(5)) == "Dhc"
    assert is_isomorphic(from_graph6(">>graph6<<Dhc"), fam.cycle(5))


def test_parse_document():
    assert parse_document("Dhc\n")["n"] == 5
    assert parse_document('{"kind": "graph", "n": 2, "edges": [[0, 1]]}')["n"] == 2
    for bad in ("", '{"n": 2}', "[1, 2]", "{oops", "!!!!"):
        with pytest.raises(FormatError):
            parse_document(bad)


def test_bad_graph_document():
    with pytest.raises(FormatError):
        graph_from_json({"kind": "graph", "n": 2, "edges": [[0, 5]]})


def test_dot():
    text = to_dot(fam.path(3), highlight=[1], edge_labels={(0, 1): "1v02"}, node_labels=["a", "b", "c"])
    assert text.startswith("graph G {")
    assert '1 [label="b", style=filled' in text
    assert '0 -- 1 [label="1v02"];' in text
    assert "1 -- 2;" in text
