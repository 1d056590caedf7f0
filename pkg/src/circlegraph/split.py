"""Extending obstruction splits to whole-graph splits, and split joins of diagrams."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .diagram import ChordDiagram
from .graph import Graph, InternalError, Split
from .naji import NajiAssignment
from .obstruction import CLAW, K4, Obstruction, is_claw_obstruction, is_k4, is_k4_obstruction


def _component_of(g: Graph, v: str) -> frozenset[str]:
    for comp in g.connected_components():
        if v in comp:
            return frozenset(comp)
    raise KeyError(v)


def _orient_like(result: Split, x_side_member: str, split_of_h: Split) -> Split:
    return result if x_side_member in split_of_h.x else result.swapped()


def claw_split_labels(obs: Obstruction, split_of_h: Split) -> tuple[str, str, str, str]:
    """Return ``(x, a, b, c)`` with the split equal to ``({a,b}, {x,c})`` up to side order."""
    x = obs.center
    side_x = split_of_h.x if x in split_of_h.x else split_of_h.y
    other = split_of_h.y if side_x is split_of_h.x else split_of_h.x
    if len(side_x) != 2 or len(other) != 2 or side_x | other != set(obs.vertices):
        raise ValueError("split is not a pair partition of the obstruction")
    (c,) = side_x - {x}
    a, b = sorted(other)
    return x, a, b, c


def claw_claim_violations(g: Graph, a: str, b: str, c: str) -> list[str]:
    """Check the two structural claims behind the claw extension."""
    common = g.neighbors(a) & g.neighbors(b) & g.neighbors(c)
    rest = g.remove_vertices(common)
    comps = {v: _component_of(rest, v) for v in (a, b, c)}
    problems = []
    if len({comps[a], comps[b], comps[c]}) != 3:
        problems.append("leaves share a component after deleting their common neighbours")
    for v in (a, b, c):
        for d in comps[v]:
            if g.neighbors(d) & common and not common <= g.neighbors(d):
                problems.append(f"{d} sees part but not all of the common neighbourhood")
    return problems


def extend_claw_split(g: Graph, beta: NajiAssignment, obs: Obstruction, split_of_h: Split) -> Split:
    if obs.kind != CLAW:
        raise ValueError("expected a Claw obstruction")
    x, a, b, c = claw_split_labels(obs, split_of_h)
    if not is_claw_obstruction(g, beta, x, a, b, c):
        raise ValueError(f"{obs} is not a Claw obstruction for this assignment")
    problems = claw_claim_violations(g, a, b, c)
    if problems:
        raise InternalError("; ".join(problems))
    common = g.neighbors(a) & g.neighbors(b) & g.neighbors(c)
    rest = g.remove_vertices(common)
    side = _component_of(rest, a) | _component_of(rest, b)
    result = Split(side, frozenset(g.vertices) - side)
    if not g.is_split(result.x, result.y):
        raise InternalError(f"claw extension {result.to_json()} is not a split")
    return _orient_like(result, a, split_of_h)


@dataclass(frozen=True)
class QuadrupleSets:
    """Maximal slots X_a..X_d around a K4 obstruction, plus the vertices ``y`` dominating them."""

    slots: tuple[frozenset[str], frozenset[str], frozenset[str], frozenset[str]]
    y: frozenset[str]

    @property
    def union(self) -> frozenset[str]:
        return frozenset().union(*self.slots)


def _fits(g: Graph, beta: NajiAssignment, slots: list[set[str]], t: int, v: str) -> bool:
    pools = [[v] if i == t else sorted(s) for i, s in enumerate(slots)]
    for quad in product(*pools):
        if not is_k4(g, quad) or not is_k4_obstruction(g, beta, *quad):
            return False
    return True


def maximal_quadruple_sets(
    g: Graph, beta: NajiAssignment, obs: Obstruction, seeds: Optional[Iterable[str]] = None
) -> QuadrupleSets:
    """Greedy fixpoint: add a vertex to the first slot where every cross-quadruple stays an obstruction."""
    if obs.kind != K4:
        raise ValueError("expected a K4 obstruction")
    seeds = tuple(seeds) if seeds is not None else obs.vertices
    if sorted(seeds) != sorted(obs.vertices):
        raise ValueError("seeds must be the obstruction's vertices")
    if not is_k4_obstruction(g, beta, *seeds):
        raise ValueError(f"{obs} is not a K4 obstruction for this assignment")
    slots = [{s} for s in seeds]
    changed = True
    while changed:
        changed = False
        for v in g.sorted_vertices():
            if any(v in s for s in slots):
                continue
            for t in range(4):
                if _fits(g, beta, slots, t, v):
                    slots[t].add(v)
                    changed = True
                    break
    union = set().union(*slots)
    y = frozenset(v for v in g.vertices if v not in union and union <= g.neighbors(v))
    return QuadrupleSets(tuple(frozenset(s) for s in slots), y)


def quadruple_claim_violations(g: Graph, beta: NajiAssignment, qs: QuadrupleSets) -> list[str]:
    """Check the cross-quadruple, trichotomy and component-locality claims."""
    problems = []
    for quad in product(*(sorted(s) for s in qs.slots)):
        if not is_k4(g, quad) or not is_k4_obstruction(g, beta, *quad):
            problems.append(f"cross-quadruple {quad} is not a K4 obstruction")
    union = qs.union
    for v in g.vertices:
        if v in union or v in qs.y:
            continue
        touched = [i for i, s in enumerate(qs.slots) if g.neighbors(v) & s]
        if len(touched) > 1:
            problems.append(f"{v} has neighbours in slots {touched}")
    outside = g.remove_vertices(union | qs.y)
    groups = (qs.y, *qs.slots)
    for comp in outside.connected_components():
        nbrs = set().union(*(g.neighbors(v) for v in comp))
        touched = [i for i, s in enumerate(groups) if nbrs & s]
        if len(touched) > 1:
            problems.append(f"component {comp} touches groups {touched}")
    return problems


def k4_split_labels(obs: Obstruction, split_of_h: Split) -> tuple[str, str, str, str]:
    """Return ``(a, b, c, d)`` with the split equal to ``({a,b}, {c,d})``."""
    xs, ys = sorted(split_of_h.x), sorted(split_of_h.y)
    if len(xs) != 2 or len(ys) != 2 or set(xs) | set(ys) != set(obs.vertices):
        raise ValueError("split is not a pair partition of the obstruction")
    return xs[0], xs[1], ys[0], ys[1]


def extend_k4_split(g: Graph, beta: NajiAssignment, obs: Obstruction, split_of_h: Split) -> Split:
    a, b, c, d = k4_split_labels(obs, split_of_h)
    qs = maximal_quadruple_sets(g, beta, obs, seeds=(a, b, c, d))
    problems = quadruple_claim_violations(g, beta, qs)
    if problems:
        raise InternalError("; ".join(problems))
    near = qs.slots[0] | qs.slots[1]
    side = set(near)
    outside = g.remove_vertices(qs.union | qs.y)
    for comp in outside.connected_components():
        if any(g.neighbors(v) & near for v in comp):
            side.update(comp)
    result = Split(frozenset(side), frozenset(g.vertices) - side)
    if not g.is_split(result.x, result.y):
        raise InternalError(f"K4 extension {result.to_json()} is not a split")
    return result


def canonical_obstruction_split(obs: Obstruction) -> Split:
    if obs.kind == CLAW:
        x, a, b, c = obs.vertices
        return Split.of((a, b), (x, c))
    a, b, c, d = sorted(obs.vertices)
    return Split.of((a, b), (c, d))


def extend_split(g: Graph, beta: NajiAssignment, obs: Obstruction, split_of_h: Split) -> Split:
    if obs.kind == CLAW:
        return extend_claw_split(g, beta, obs, split_of_h)
    return extend_k4_split(g, beta, obs, split_of_h)


def split_join_graph(d1: ChordDiagram, d2: ChordDiagram, x: str, y: str) -> Graph:
    """The graph a split join of ``d1`` (marker y) and ``d2`` (marker x) must realize."""
    g1 = d1.interlacement_graph()
    g2 = d2.interlacement_graph()
    edges = [e for e in g1.edges() if y not in e] + [e for e in g2.edges() if x not in e]
    edges += [(u, v) for u in g1.neighbors(y) for v in g2.neighbors(x)]
    verts = [v for v in g1.vertices if v != y] + [v for v in g2.vertices if v != x]
    return Graph.from_edges(edges, verts)


def compose_split_diagrams(
    d1: ChordDiagram, d2: ChordDiagram, x: str, y: str, target: Optional[Graph] = None
) -> ChordDiagram:
    """Cut ``d1`` at chord y and ``d2`` at chord x and glue the four arcs alternately.

    Of the two possible gluings the one whose interlacement equals ``target``
    is returned (``target`` defaults to the split join of the two graphs).
    """
    if y not in d1.word or x not in d2.word:
        raise ValueError("marker chords missing")
    if (set(d1.word) - {y}) & (set(d2.word) - {x}):
        raise ValueError("diagrams share chords other than the markers")
    target = target if target is not None else split_join_graph(d1, d2, x, y)
    w1 = d1.rotated_to(y)
    j = w1.index(y, 1)
    s1, s2 = w1[1:j], w1[j + 1 :]
    w2 = d2.rotated_to(x)
    k = w2.index(x, 1)
    t1, t2 = w2[1:k], w2[k + 1 :]
    for word in (s1 + t1 + s2 + t2, s1 + t2 + s2 + t1):
        glued = ChordDiagram(word)
        if glued.interlacement_graph() == target:
            return glued
    raise InternalError("neither gluing realizes the split join")
