"""Claw and K4 obstructions, edge orientations, and minimal circle covers."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, InternalError
from .naji import NajiAssignment

CLAW = "Claw"
K4 = "K4"


@dataclass(frozen=True)
class Obstruction:
    """``vertices`` lists the centre first for a Claw; K4 vertices are sorted."""

    kind: str
    vertices: tuple[str, str, str, str]

    @property
    def center(self) -> str:
        return self.vertices[0]

    @property
    def leaves(self) -> tuple[str, str, str]:
        return self.vertices[1:]

    def to_json(self) -> dict:
        if self.kind == CLAW:
            return {"kind": CLAW, "center": self.center, "leaves": list(self.leaves)}
        return {"kind": K4, "vertices": list(self.vertices)}

    @classmethod
    def from_json(cls, obj: dict) -> "Obstruction":
        if obj["kind"] == CLAW:
            return cls(CLAW, (obj["center"], *obj["leaves"]))
        return cls(K4, tuple(obj["vertices"]))


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    head: dict[frozenset[str], str]

    def arc(self, u: str, v: str) -> bool:
        """True when the edge uv points from u to v."""
        return self.head[frozenset((u, v))] == v


def orientation_of(g: Graph, beta: NajiAssignment) -> Orientation:
    """Orient uv towards v exactly when ``b(u, v) = 1``."""
    head = {}
    for u, v in g.edges():
        if beta[(u, v)] == beta[(v, u)]:
            raise ValueError(f"NS1({u},{v}) is violated; edge has no well-defined head")
        head[frozenset((u, v))] = v if beta[(u, v)] else u
    return Orientation(g, head)


def claw_center(g: Graph, quad: Sequence[str]) -> Optional[str]:
    """The centre if ``quad`` induces a claw in ``g``, else None."""
    sub = g.induced_subgraph(quad)
    if sub.n_edges != 3:
        return None
    for v in quad:
        if len(sub.neighbors(v)) == 3:
            return v
    return None


def is_k4(g: Graph, quad: Sequence[str]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(quad, 2))


def _claw_sums(beta: NajiAssignment, a: str, b: str, c: str) -> tuple[int, int, int]:
    return (
        beta[(a, b)] ^ beta[(a, c)],
        beta[(b, a)] ^ beta[(b, c)],
        beta[(c, a)] ^ beta[(c, b)],
    )


def is_claw_obstruction(g: Graph, beta: NajiAssignment, x: str, a: str, b: str, c: str) -> bool:
    if claw_center(g, (x, a, b, c)) != x:
        raise ValueError(f"{{{x},{a},{b},{c}}} does not induce a claw centred at {x}")
    return _claw_sums(beta, a, b, c) == (1, 1, 1)


def _cycle_parity(beta: NajiAssignment, cycle: Sequence[str]) -> int:
    k = len(cycle)
    return sum(beta[(cycle[i], cycle[(i + 1) % k])] for i in range(k)) & 1


def is_k4_obstruction(g: Graph, beta: NajiAssignment, a: str, b: str, c: str, d: str) -> bool:
    """All three 4-cycles of the K4 carry an odd number of forward arcs."""
    if not is_k4(g, (a, b, c, d)):
        raise ValueError(f"{{{a},{b},{c},{d}}} does not induce K4")
    return all(
        _cycle_parity(beta, cyc) == 1 for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d))
    )


def obstruction_at(g: Graph, beta: NajiAssignment, quad: Sequence[str]) -> Optional[Obstruction]:
    quad = sorted(quad)
    if is_k4(g, quad):
        if is_k4_obstruction(g, beta, *quad):
            return Obstruction(K4, tuple(quad))
        return None
    x = claw_center(g, quad)
    if x is None:
        return None
    leaves = [v for v in quad if v != x]
    if is_claw_obstruction(g, beta, x, *leaves):
        return Obstruction(CLAW, (x, *leaves))
    return None


def find_obstruction(g: Graph, beta: NajiAssignment) -> Obstruction:
    """Least 4-subset (lexicographic) on which ``beta`` is a Claw or K4 obstruction.

    Exhaustive scan; a non-chordal solution on a connected graph always has
    one, so an empty scan is reported as an internal error.
    """
    for quad in combinations(g.sorted_vertices(), 4):
        obs = obstruction_at(g, beta, quad)
        if obs is not None:
            return obs
    raise InternalError("no Claw or K4 obstruction found for a non-chordal solution")


@dataclass(frozen=True)
class CyclicArcSequence:
    """Arcs in cyclic order; ``indices`` point into the caller's arc list."""

    n_points: int
    arcs: tuple[tuple[int, int], ...]
    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arcs)


def _arc_length(arc: tuple[int, int], n: int) -> int:
    s, e = arc
    if not 0 <= s < n:
        raise ValueError(f"arc start {s} outside circle of {n} points")
    if s <= e <= s + n:
        return e - s
    if 0 <= e < s:
        return e - s + n
    raise ValueError(f"bad arc {arc!r}")


def arc_cells(arc: tuple[int, int], n: int) -> frozenset[int]:
    """Cells covered by a closed arc.

    A circle of ``n`` points has ``2n`` cells: cell ``2i`` is point ``i`` and
    cell ``2i+1`` the open segment from point ``i`` to ``i+1``. The arc
    ``(s, e)`` runs clockwise from s to e; ``e = s + n`` is the whole circle.
    """
    length = _arc_length(arc, n)
    if length == n:
        return frozenset(range(2 * n))
    start = 2 * arc[0]
    return frozenset((start + k) % (2 * n) for k in range(2 * length + 1))


def covers(arcs: Sequence[tuple[int, int]], n: int) -> bool:
    cells: set[int] = set()
    for arc in arcs:
        cells |= arc_cells(arc, n)
    return len(cells) == 2 * n


def _minimum_cover(cells: list[frozenset[int]], total: int) -> list[int]:
    """Fewest arcs covering all cells, by greedy extension from each start arc."""
    best: Optional[list[int]] = None
    for first in range(len(cells)):
        chosen = [first]
        covered = set(cells[first])
        while len(covered) < total:
            # extend the run that ends at the first uncovered cell clockwise
            # of the chosen block
            gap = next(c for c in _clockwise_from(cells[first], total) if c not in covered)
            best_j, best_reach = -1, -1
            for j, cj in enumerate(cells):
                if j in chosen or gap not in cj:
                    continue
                reach = _reach(cj, gap, total)
                if reach > best_reach:
                    best_j, best_reach = j, reach
            if best_j < 0:
                break
            chosen.append(best_j)
            covered |= cells[best_j]
            if best is not None and len(chosen) >= len(best):
                break
        if len(covered) == total and (best is None or len(chosen) < len(best)):
            best = chosen
    if best is None:
        raise ValueError("arcs do not cover the circle")
    return best


def _clockwise_from(cell_set: frozenset[int], total: int):
    # walk clockwise starting just after the arc's last cell
    if len(cell_set) == total:
        return iter(())
    end = next(c for c in cell_set if (c + 1) % total not in cell_set)
    return ((end + 1 + k) % total for k in range(total))


def _reach(cell_set: frozenset[int], start: int, total: int) -> int:
    """Cells of the arc reached clockwise from ``start`` before it ends."""
    k = 0
    while k < total and (start + k) % total in cell_set:
        k += 1
    return k


def minimal_cover(arcs: Sequence[tuple[int, int]], n_points: int) -> CyclicArcSequence:
    """A fewest-arc subfamily of ``arcs`` covering the circle, in cyclic order.

    In the result each arc meets exactly its two cyclic neighbours. The order
    comes from the cells covered exactly once: they fall into one run per
    chosen arc, and the runs are read clockwise.
    """
    cells = [arc_cells(a, n_points) for a in arcs]
    total = 2 * n_points
    chosen = _minimum_cover(cells, total)
    if len(chosen) == 1:
        i = chosen[0]
        return CyclicArcSequence(n_points, (tuple(arcs[i]),), (i,))

    owner: dict[int, int] = {}
    count = [0] * total
    for i in chosen:
        for c in cells[i]:
            count[c] += 1
            owner[c] = i
    once = [c for c in range(total) if count[c] == 1]
    # start reading at a run boundary so no run is split by the wrap-around
    start = next(c for c in once if count[(c - 1) % total] != 1 or owner[(c - 1) % total] != owner[c])
    order: list[int] = []
    for k in range(total):
        c = (start + k) % total
        if count[c] == 1 and (not order or order[-1] != owner[c]):
            order.append(owner[c])
    if order[0] == order[-1] and len(order) > 1:
        order.pop()
    if sorted(order) != sorted(chosen):
        raise InternalError("exactly-once runs do not match the chosen arcs")
    return CyclicArcSequence(n_points, tuple(tuple(arcs[i]) for i in order), tuple(order))


def cyclic_cover_violations(seq: CyclicArcSequence) -> list[str]:
    """Checks the three defining properties directly; empty means valid."""
    n = seq.n_points
    cells = [arc_cells(a, n) for a in seq.arcs]
    k = len(cells)
    problems = []
    if set().union(*cells) != set(range(2 * n)):
        problems.append("arcs do not cover the circle")
    if k == 1:
        return problems
    for i in range(k):
        for j in range(i + 1, k):
            neighbours = (j - i) % k in (1, k - 1)
            meet = bool(cells[i] & cells[j])
            if neighbours and not meet:
                problems.append(f"consecutive arcs {i},{j} are disjoint")
            if not neighbours and meet:
                problems.append(f"non-consecutive arcs {i},{j} intersect")
    return problems
