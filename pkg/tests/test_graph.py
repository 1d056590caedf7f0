from __future__ import annotations

import itertools
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlegraph.graph import (
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    parse_graph,
    path_graph,
    to_graph6,
)

from conftest import atlas_graphs


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    verts = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(verts, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, verts)


def test_parse_edgelist_path():
    g = parse_graph("1 2\n2 3")
    assert g.vertices == ("1", "2", "3")
    assert g == path_graph([1, 2, 3])


def test_parse_empty():
    g = parse_graph("")
    assert len(g) == 0 and g.edges() == []


def test_parse_comments_and_isolated():
    g = parse_graph("# header\na b  # trailing\n\nc\n")
    assert g.vertices == ("a", "b", "c")
    assert g.edges() == [("a", "b")]
    assert g.neighbors("c") == frozenset()


def test_duplicate_edge_warns_and_dedupes():
    with pytest.warns(UserWarning, match="duplicate"):
        g = parse_graph("1 2\n2 1\n")
    assert g.n_edges == 1


@pytest.mark.parametrize("text", ["1 1\n", "1 2 3\n"])
def test_bad_edgelist_lines(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_graph6_matches_networkx_decoder():
    g = parse_graph("D~{", "graph6")
    ref = nx.from_graph6_bytes(b"D~{")
    assert len(g) == 5
    assert g.edge_set() == {frozenset((str(u), str(v))) for u, v in ref.edges()}


@pytest.mark.parametrize("g", atlas_graphs(6), ids=lambda g: to_graph6(g))
def test_graph6_roundtrip_against_networkx(g):
    code = to_graph6(g)
    ref = nx.from_graph6_bytes(code.encode())
    back = parse_graph(code, "graph6")
    assert back.edge_set() == {frozenset((str(u), str(v))) for u, v in ref.edges()}
    assert nx.to_graph6_bytes(ref, header=False).strip().decode() == code


def test_graph6_large_header():
    g = cycle_graph(range(70))
    assert parse_graph(to_graph6(g), "graph6") == g


@pytest.mark.parametrize("bad", ["D~\x01", "D~", ""])
def test_graph6_rejects_bad_input(bad):
    with pytest.raises(GraphFormatError):
        parse_graph(bad, "graph6")


def test_self_loop_rejected_by_constructor():
    with pytest.raises(ValueError):
        Graph.from_edges([("a", "a")])


def test_induced_subgraph_examples():
    c5 = cycle_graph([1, 2, 3, 4, 5])
    assert c5.induced_subgraph({"1", "2", "3"}) == path_graph([1, 2, 3])
    assert c5.induced_subgraph(c5.vertices) == c5
    assert complete_graph("abcd").induced_subgraph("abc") == complete_graph("abc")
    with pytest.raises(KeyError):
        c5.induced_subgraph({"9"})


def test_connected_components_examples():
    g = Graph.from_edges([("u", "v")], ["u", "v", "w"])
    assert g.connected_components() == [["u", "v"], ["w"]]
    assert cycle_graph([1, 2, 3, 4, 5]).connected_components() == [["1", "2", "3", "4", "5"]]
    assert Graph.from_edges([]).connected_components() == []


def _prefixes_connected(g, order):
    return all(g.induced_subgraph(order[:i]).is_connected() for i in range(1, len(order) + 1))


def test_elimination_order_examples():
    assert path_graph("abc").elimination_order() == ["c", "b", "a"]
    assert Graph.from_edges([], ["v"]).elimination_order() == ["v"]
    order = cycle_graph([1, 2, 3, 4, 5]).elimination_order()
    assert sorted(order) == ["1", "2", "3", "4", "5"]
    assert _prefixes_connected(cycle_graph([1, 2, 3, 4, 5]), order)
    with pytest.raises(ValueError):
        Graph.from_edges([("a", "b")], ["c"]).elimination_order()


def test_is_split_examples():
    assert complete_graph("abcd").is_split({"a", "b"}, {"c", "d"})
    c4 = cycle_graph("abcd")
    assert c4.is_split({"a", "c"}, {"b", "d"})
    p4 = path_graph("abcd")
    assert not p4.is_split({"a", "c"}, {"b", "d"})
    assert not c4.is_split({"a"}, {"b", "c", "d"})
    assert not c4.is_split({"a", "b"}, {"b", "c", "d"})


@settings(max_examples=150, deadline=None)
@given(graphs(), st.data())
def test_induced_subgraph_brute_force(g, data):
    s = data.draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    sub = g.induced_subgraph(s)
    expected = {frozenset((u, v)) for u, v in itertools.combinations(sorted(s), 2) if g.has_edge(u, v)}
    assert sub.edge_set() == expected
    assert set(sub.vertices) == s


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_elimination_order_prefixes(g):
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        assert _prefixes_connected(sub, sub.elimination_order())


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), st.data())
def test_is_split_symmetric(g, data):
    side = data.draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    other = set(g.vertices) - side
    assert g.is_split(side, other) == g.is_split(other, side)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_edgelist_roundtrip_fixpoint(g):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        once = parse_graph(g.to_edgelist())
        twice = parse_graph(once.to_edgelist())
    assert once == g
    assert twice.to_edgelist() == once.to_edgelist()
