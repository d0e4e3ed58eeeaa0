import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strongcompat import io
from strongcompat.algebra import cyclic_group, group_from_table, ladder_poset
from strongcompat.compat import Graph, petersen_graph
from strongcompat.complexes import crosspolytope_boundary, make_complex
from strongcompat.errors import ParseError, ValidationError
from strongcompat.generators import random_gposet


def test_dimacs_round_trip():
    G = petersen_graph()
    text = io.write_dimacs(G, "petersen\nsecond line")
    assert text.startswith("c petersen\nc second line\np edge 10 15\n")
    assert io.read_dimacs(text) == G


@given(seed=st.integers(0, 10**6), n=st.integers(1, 15), p=st.floats(0, 1))
def test_dimacs_and_json_round_trip_random_graphs(seed, n, p):
    import random

    rng = random.Random(seed)
    G = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
    assert io.read_dimacs(io.write_dimacs(G)) == G
    assert io.graph_from_dict(json.loads(io.dumps(io.graph_to_dict(G)))) == G


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 1 2\np edge 2 1\n", 1),
        ("p edge 2 1\ne 1 3\n", 2),
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 1\ne 1\n", 2),
        ("p edge x 1\n", 1),
        ("p edge 2 0\np edge 2 0\n", 2),
        ("c ok\np edge 2 1\nq 1 2\n", 3),
        ("p edge 2 1\ne a b\n", 2),
    ],
)
def test_dimacs_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        io.read_dimacs(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_dimacs_without_header():
    with pytest.raises(ParseError):
        io.read_dimacs("c nothing\n")


def test_dimacs_tolerates_wrong_edge_count():
    assert io.read_dimacs("p edge 3 5\ne 1 2\n").edge_count == 1


def test_malformed_json_reports_line():
    with pytest.raises(ParseError) as exc:
        io.loads('{\n  "a": 1,\n  oops\n}')
    assert exc.value.line == 3


def test_group_round_trip_and_spec(tmp_path):
    G = group_from_table([[a ^ b for b in range(4)] for a in range(4)], names=["e", "a", "b", "c"])
    assert io.group_from_dict(io.group_to_dict(G)) == G
    path = tmp_path / "klein.json"
    path.write_text(io.dumps(io.group_to_dict(G)))
    assert io.parse_group_spec(str(path)) == G
    assert io.parse_group_spec("cyclic:3") == cyclic_group(3)
    with pytest.raises(ParseError):
        io.parse_group_spec("cyclic:x")
    with pytest.raises(ValidationError):
        io.group_from_dict({"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(ParseError):
        io.group_from_dict([1, 2])


@given(seed=st.integers(0, 10**6), k=st.sampled_from([1, 2, 3]), size=st.integers(1, 15))
def test_poset_round_trip(seed, k, size):
    P = random_gposet(k, size, 0.2, seed)
    Q = io.poset_from_dict(json.loads(io.dumps(io.poset_to_dict(P))))
    assert Q.up == P.up and Q.action == P.action and Q.group == P.group


def test_poset_group_references(tmp_path):
    (tmp_path / "z2.json").write_text(io.dumps(io.group_to_dict(cyclic_group(2))))
    d = io.poset_to_dict(ladder_poset(cyclic_group(2), 2))
    d["group"] = "z2.json"
    (tmp_path / "p.json").write_text(io.dumps(d))
    assert io.load_poset(tmp_path / "p.json").up == ladder_poset(cyclic_group(2), 2).up
    d["group"] = "cyclic:2"
    assert io.poset_from_dict(d).group.order == 2
    del d["action"]
    with pytest.raises(ValidationError):
        io.poset_from_dict(d)
    with pytest.raises(ParseError):
        io.poset_from_dict({"size": 2})
    assert io.poset_from_dict({"size": 2, "less": [[0, 1]]}).is_less(0, 1)


def test_complex_round_trip(tmp_path):
    K = crosspolytope_boundary(2)
    K2 = io.complex_from_dict(json.loads(io.dumps(io.complex_to_dict(K))))
    assert K2.faces == K.faces and K2.action == K.action
    L = make_complex([[0, 1], [1, 2]])
    path = tmp_path / "c.json"
    path.write_text(io.dumps(io.complex_to_dict(L)))
    assert io.load_complex(path).faces == L.faces


def test_coloring_json():
    assert io.coloring_from_json(io.coloring_to_json([1, 2, 3])) == [1, 2, 3]
    for bad in ('{"a": 1}', "[1, true]", "[1.5]"):
        with pytest.raises(ParseError):
            io.coloring_from_json(bad)


def test_load_graph_dispatches_on_suffix(tmp_path):
    G = petersen_graph()
    (tmp_path / "g.col").write_text(io.write_dimacs(G))
    (tmp_path / "g.json").write_text(io.dumps(io.graph_to_dict(G)))
    assert io.load_graph(tmp_path / "g.col") == io.load_graph(tmp_path / "g.json") == G
    with pytest.raises(ValidationError):
        io.graph_from_dict({"vertices": 3, "adjacency": [[1], [0]]})
