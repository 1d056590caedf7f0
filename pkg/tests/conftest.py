from __future__ import annotations

import random

import networkx as nx
import pytest

from circlegraph.diagram import HEAD, TAIL, OrientedChordDiagram
from circlegraph.graph import Graph, complete_graph, cycle_graph
from circlegraph.naji import NajiAssignment, build_system, solve

CLAW_TABLE = {
    "x": {"a": 1, "b": 1, "c": 1},
    "a": {"x": 0, "b": 0, "c": 1},
    "b": {"x": 0, "a": 1, "c": 0},
    "c": {"x": 0, "a": 0, "b": 1},
}
K4_TABLE = {
    "a": {"b": 1, "c": 0, "d": 0},
    "b": {"a": 0, "c": 1, "d": 0},
    "c": {"a": 1, "b": 0, "d": 0},
    "d": {"a": 1, "b": 1, "c": 1},
}
C5_DOW = "1 5 2 1 3 2 4 3 5 4"


def make_claw() -> Graph:
    return Graph.from_edges([("x", "a"), ("x", "b"), ("x", "c")])


def make_k4() -> Graph:
    return complete_graph("abcd")


def make_c5() -> Graph:
    return cycle_graph([1, 2, 3, 4, 5])


def make_w5() -> Graph:
    return Graph.from_edges(
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)] + [(0, i) for i in range(1, 6)]
    )


def from_nx(h) -> Graph:
    return Graph.from_edges(((str(u), str(v)) for u, v in h.edges()), (str(v) for v in h.nodes()))


def atlas_graphs(max_n: int, connected_only: bool = False) -> list[Graph]:
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > max_n:
            continue
        if connected_only and (h.number_of_nodes() == 0 or not nx.is_connected(h)):
            continue
        out.append(from_nx(h))
    return out


def random_oriented_diagram(rng: random.Random, n: int) -> OrientedChordDiagram:
    labels = [str(i) for i in range(1, n + 1)]
    word = labels * 2
    rng.shuffle(word)
    flip = {v: rng.random() < 0.5 for v in labels}
    seen: set[str] = set()
    toks = []
    for v in word:
        first = v not in seen
        seen.add(v)
        toks.append((v, HEAD if first != flip[v] else TAIL))
    return OrientedChordDiagram(tuple(toks))


def random_connected_diagram(rng: random.Random, n: int) -> OrientedChordDiagram:
    while True:
        d = random_oriented_diagram(rng, n)
        if d.interlacement_graph().is_connected():
            return d


def random_connected_order(rng: random.Random, g: Graph) -> list[str]:
    order = [rng.choice(g.vertices)]
    chosen = set(order)
    while len(order) < len(g):
        frontier = sorted({w for v in order for w in g.neighbors(v)} - chosen)
        v = rng.choice(frontier)
        order.append(v)
        chosen.add(v)
    return order


def random_solution(rng: random.Random, g: Graph, tries: int = 60):
    """A solution drawn by pinning random variables; None if the system is infeasible."""
    system = build_system(g)
    base = solve(system)
    if not isinstance(base, NajiAssignment):
        return None
    for _ in range(tries):
        k = rng.randint(1, max(1, len(system.pairs) // 3))
        pins = {p: rng.randint(0, 1) for p in rng.sample(system.pairs, k)}
        result = solve(system, pins)
        if isinstance(result, NajiAssignment):
            return result
    return base


@pytest.fixture
def claw() -> Graph:
    return make_claw()


@pytest.fixture
def k4() -> Graph:
    return make_k4()


@pytest.fixture
def claw_beta(claw) -> NajiAssignment:
    return NajiAssignment.from_table(claw, CLAW_TABLE)


@pytest.fixture
def k4_beta(k4) -> NajiAssignment:
    return NajiAssignment.from_table(k4, K4_TABLE)


@pytest.fixture
def c5() -> Graph:
    return make_c5()


@pytest.fixture
def w5() -> Graph:
    return make_w5()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
