from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlegraph.diagram import (
    HEAD,
    TAIL,
    ChordDiagram,
    NonChordal,
    OrientedChordDiagram,
    beta_from_diagram,
    blocking_chords,
    build_diagram,
    canonical_encoding,
    feasible_gaps,
    insert_chord,
    interlacement_graph,
    per_vertex_gaps,
)
from circlegraph.graph import Graph, InternalError, complete_graph, cycle_graph
from circlegraph.naji import NajiAssignment, reorient, restrict, verify

from conftest import (
    C5_DOW,
    atlas_graphs,
    random_connected_diagram,
    random_connected_order,
    random_oriented_diagram,
    random_solution,
)


def crossing_graph(word):
    """Interlacement via explicit arc membership on a unit-spaced circle."""
    n = len(word)
    pos = {}
    for i, v in enumerate(word):
        pos.setdefault(v, []).append(i)
    edges = []
    for u, v in itertools.combinations(sorted(pos), 2):
        a, b = pos[u]
        inside = [p for p in pos[v] if a < p < b]
        if len(inside) == 1:
            edges.append((u, v))
    assert n == 2 * len(pos)
    return Graph.from_edges(edges, pos)


def c5_diagram() -> OrientedChordDiagram:
    return OrientedChordDiagram.from_word(C5_DOW.split())


def test_interlacement_c5_word(c5):
    assert ChordDiagram.parse(C5_DOW).interlacement_graph() == c5
    assert c5_diagram().interlacement_graph() == c5


def test_interlacement_any_orientation_c5(c5):
    d = c5_diagram()
    for c in d.chords:
        assert d.reversed_chord(c).interlacement_graph() == c5


def test_interlacement_small_examples():
    assert ChordDiagram.parse("u u v v").interlacement_graph() == Graph.from_edges([], ["u", "v"])
    assert interlacement_graph(ChordDiagram.parse("a b c d a b c d")) == complete_graph("abcd")


def test_malformed_words():
    with pytest.raises(ValueError):
        ChordDiagram.parse("a b a")
    with pytest.raises(ValueError):
        OrientedChordDiagram.parse("a+ a+")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 9), st.randoms(use_true_random=False))
def test_interlacement_matches_direct_count(n, rnd):
    d = random_oriented_diagram(rnd, n)
    word = [v for v, _ in d.tokens]
    assert d.interlacement_graph() == crossing_graph(word)


def test_feasible_gaps_k2_example():
    d = OrientedChordDiagram.parse("u+ v+ u- v-")
    assert d.right_gaps("u") == {1, 2}
    assert d.right_gaps("v") == {2, 3}
    g = complete_graph("uvc")
    values = {p: 0 for p in itertools.permutations("uvc", 2)}
    heads, _ = feasible_gaps(d, NajiAssignment(g, values), "c")
    assert heads.gaps == {2}
    assert heads.diagram_size == 4


def test_feasible_gaps_single_chord():
    d = OrientedChordDiagram.parse("u+ u-")
    g = Graph.from_edges([], ["u", "c"])
    heads, tails = feasible_gaps(d, NajiAssignment(g, {("u", "c"): 0, ("c", "u"): 0}), "c")
    assert heads.gaps == {1}
    # flipping c's own orientation changes nothing for a non-adjacent chord
    assert tails.gaps == {1}


def test_feasible_gaps_rejects_present_chord():
    d = OrientedChordDiagram.parse("u+ u-")
    g = complete_graph("uv")
    with pytest.raises(ValueError):
        feasible_gaps(d, NajiAssignment(g, {("u", "v"): 1, ("v", "u"): 0}), "u")


def test_claw_table_gets_stuck(claw, claw_beta):
    failure = build_diagram(claw, claw_beta)
    assert isinstance(failure, NonChordal)
    heads, tails = feasible_gaps(
        failure.diagram, restrict(claw_beta, failure.prefix + (failure.failing,)), failure.failing
    )
    assert not heads or not tails
    assert failure.head_empty == (not heads)


def test_claw_leaves_cannot_realize_table(claw_beta):
    # the leaf restriction demands that every leaf chord separates the other two
    leaves = restrict(claw_beta, "abc")
    for toks in itertools.permutations([("a", HEAD), ("a", TAIL), ("b", HEAD), ("b", TAIL), ("c", HEAD), ("c", TAIL)]):
        if toks[0] != ("a", HEAD):
            continue
        d = OrientedChordDiagram(toks)
        assert beta_from_diagram(d) != leaves


def test_k4_table_gets_stuck(k4, k4_beta):
    assert isinstance(build_diagram(k4, k4_beta), NonChordal)


def test_insert_single_chord():
    d = OrientedChordDiagram.parse("u+ u-")
    out = insert_chord(d, "v", tail_gap=0, head_gap=1)
    assert out.canonical_encoding() == OrientedChordDiagram.parse("u+ v+ u- v-").canonical_encoding()
    assert out.interlacement_graph() == complete_graph("uv")


def test_insert_third_triangle_chord():
    target = OrientedChordDiagram.from_word("a b c a b c".split())
    beta = beta_from_diagram(target)
    d = build_diagram(complete_graph("abc"), beta, order=["a", "b", "c"])
    assert d.interlacement_graph() == complete_graph("abc")
    assert d.unoriented().canonical() == ChordDiagram.parse("a b c a b c").canonical()


def test_insert_errors():
    d = OrientedChordDiagram.parse("u+ u-")
    with pytest.raises(ValueError):
        insert_chord(d, "v", 1, 1)
    with pytest.raises(ValueError):
        insert_chord(d, "u", 0, 1)
    with pytest.raises(ValueError):
        insert_chord(d, "v", 0, 5)


def test_rebuild_c5_diagram(c5):
    d = c5_diagram()
    beta = beta_from_diagram(d)
    out = build_diagram(c5, beta, order=["1", "2", "3", "4", "5"])
    assert out.canonical_encoding() == d.canonical_encoding()
    assert build_diagram(c5, beta).canonical_encoding() == d.canonical_encoding()


def test_build_empty_and_single():
    assert build_diagram(Graph.from_edges([]), NajiAssignment(Graph.from_edges([]), {})).tokens == ()
    one = Graph.from_edges([], ["v"])
    assert str(build_diagram(one, NajiAssignment(one, {}))) == "v+ v-"


def test_build_rejects_disconnected_prefix(c5):
    beta = beta_from_diagram(c5_diagram())
    with pytest.raises(ValueError):
        build_diagram(c5, beta, order=["1", "3", "2", "4", "5"])


def test_canonical_rotations():
    base = ChordDiagram.parse("a b a b")
    assert ChordDiagram.parse("b a b a").canonical() == base.canonical()
    assert OrientedChordDiagram.parse("u+ u-").canonical_encoding() == OrientedChordDiagram.parse("u- u+").canonical_encoding()


def test_canonical_stable_across_c5_rotations():
    d = c5_diagram()
    n = len(d.tokens)
    encodings = {canonical_encoding(OrientedChordDiagram(d.tokens[i:] + d.tokens[:i])) for i in range(n)}
    assert len(encodings) == 1
    expected = min(" ".join(v + e for v, e in d.tokens[i:] + d.tokens[:i]) for i in range(n))
    assert encodings == {expected}


def test_reflection_complements_beta():
    d = c5_diagram()
    mirror = OrientedChordDiagram(tuple(reversed(d.tokens)))
    b, m = beta_from_diagram(d), beta_from_diagram(mirror)
    assert all(m[p] == 1 - b[p] for p in b.values)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 9), st.randoms(use_true_random=False))
def test_round_trip(n, rnd):
    d = random_connected_diagram(rnd, n)
    g = d.interlacement_graph()
    beta = beta_from_diagram(d)
    trace: list = []
    out = build_diagram(g, beta, trace=trace)
    assert isinstance(out, OrientedChordDiagram)
    assert out.canonical_encoding() == d.canonical_encoding()
    assert beta_from_diagram(out) == beta
    assert all(h == 1 and t == 1 for _, h, t in trace)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8), st.randoms(use_true_random=False))
def test_unique_under_orders(n, rnd):
    d = random_connected_diagram(rnd, n)
    g = d.interlacement_graph()
    beta = beta_from_diagram(d)
    encodings = set()
    for _ in range(5):
        order = random_connected_order(rnd, g)
        trace: list = []
        out = build_diagram(g, beta, order=order, trace=trace)
        assert all(h <= 1 and t <= 1 for _, h, t in trace)
        encodings.add(out.canonical_encoding())
    assert len(encodings) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8), st.randoms(use_true_random=False))
def test_insertion_keeps_required_edges(n, rnd):
    d = random_connected_diagram(rnd, n)
    g = d.interlacement_graph()
    beta = beta_from_diagram(d)
    order = random_connected_order(rnd, g)
    cur = OrientedChordDiagram(((order[0], HEAD), (order[0], TAIL)))
    for i in range(1, len(order)):
        c = order[i]
        local = restrict(beta, order[: i + 1])
        heads, tails = feasible_gaps(cur, local, c)
        cur = insert_chord(cur, c, tails.only(), heads.only())
        assert cur.interlacement_graph() == g.induced_subgraph(order[: i + 1])
        assert beta_from_diagram(cur) == local


def test_disconnected_prefix_is_refused_not_guessed():
    g = cycle_graph("abcd")
    beta = beta_from_diagram(OrientedChordDiagram.from_word("a c b d c a d b".split()))
    assert verify(g, beta) == []
    with pytest.raises(ValueError):
        build_diagram(g, beta, order=["a", "c", "b", "d"])


def test_gapset_only():
    heads, _ = feasible_gaps(
        OrientedChordDiagram.parse("u+ u-"),
        NajiAssignment(Graph.from_edges([], ["u", "c"]), {("u", "c"): 1, ("c", "u"): 1}),
        "c",
    )
    assert heads.only() == 0
    with pytest.raises(InternalError):
        type(heads)(2, frozenset({0, 1})).only()


def _stuck_regions(failure, beta):
    local = restrict(beta, failure.prefix + (failure.failing,))
    if not failure.head_empty:
        local = reorient(local, failure.failing)
    return per_vertex_gaps(failure.diagram, local, failure.failing)


def test_blocking_chords_claw(claw, claw_beta):
    failure = build_diagram(claw, claw_beta)
    chords = blocking_chords(failure, claw_beta)
    regions = _stuck_regions(failure, claw_beta)
    assert chords and set(chords) <= set(failure.prefix)
    assert frozenset.intersection(*(regions[v] for v in chords)) == frozenset()


def test_blocking_chords_are_minimal(rng):
    checked = 0
    for g in atlas_graphs(7, connected_only=True):
        if len(g) < 4:
            continue
        beta = random_solution(rng, g)
        if beta is None:
            continue
        failure = build_diagram(g, beta)
        if not isinstance(failure, NonChordal):
            continue
        regions = _stuck_regions(failure, beta)
        chords = blocking_chords(failure, beta)
        everything = frozenset(range(len(failure.diagram.tokens)))
        assert everything.intersection(*(regions[v] for v in chords)) == frozenset()
        for drop in chords:
            rest = [regions[v] for v in chords if v != drop]
            assert everything.intersection(*rest), (chords, drop)
        checked += 1
    assert checked > 20
