"""Certifying circle-graph recognition.

``recognize`` follows the minimal-counterexample argument as a recursion:
solve the Naji system, try to grow a chord diagram from the solution, and
when that fails locate an obstruction, extend one of its splits to the
whole graph, recurse on both sides and glue the two diagrams.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .diagram import ChordDiagram, NonChordal, build_diagram
from .graph import Graph, InternalError, Split
from .naji import (
    InfeasibilityWitness,
    NajiAssignment,
    build_system,
    check_witness,
    solve,
    verify,
)
from .obstruction import find_obstruction
from .split import canonical_obstruction_split, compose_split_diagrams, extend_split

CIRCLE = "circle"
NOT_CIRCLE = "not-circle"


@dataclass(frozen=True)
class Certificate:
    verdict: str
    diagram: Optional[ChordDiagram] = None
    infeasibility: Optional[InfeasibilityWitness] = None
    trace: tuple = field(default=(), compare=False)

    @property
    def is_circle(self) -> bool:
        return self.verdict == CIRCLE

    def to_json(self) -> dict:
        if self.is_circle:
            return {"verdict": CIRCLE, "diagram": str(self.diagram), "trace": list(self.trace)}
        return {"verdict": NOT_CIRCLE, "infeasible_rows": self.infeasibility.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        if obj["verdict"] == CIRCLE:
            return cls(CIRCLE, diagram=ChordDiagram.parse(obj["diagram"]), trace=tuple(obj.get("trace", ())))
        if obj["verdict"] == NOT_CIRCLE:
            return cls(NOT_CIRCLE, infeasibility=InfeasibilityWitness.from_json(obj["infeasible_rows"]))
        raise ValueError(f"unknown verdict {obj['verdict']!r}")


def _positive(diagram: ChordDiagram, trace: list) -> Certificate:
    return Certificate(CIRCLE, diagram=diagram, trace=tuple(trace))


def _fix_mirror(g: Graph, beta: NajiAssignment) -> NajiAssignment:
    """Pick the mirror image in which the second chord's head is left of the first.

    Complementing every value is a reflection of the diagram and maps
    solutions to solutions, so this only fixes the chirality of the output.
    """
    first, second = g.elimination_order()[:2]
    if beta[(first, second)] == 1:
        return beta
    return NajiAssignment(g, {p: b ^ 1 for p, b in beta.values.items()})


def default_solution(g: Graph) -> NajiAssignment | InfeasibilityWitness:
    """The solution ``recognize`` starts from on a connected graph, or the witness."""
    result = solve(build_system(g))
    if isinstance(result, InfeasibilityWitness) or len(g) <= 1:
        return result
    return _fix_mirror(g, result)


def _least_crossing_edge(g: Graph, split: Split) -> tuple[str, str]:
    return min((u, v) for u in split.x for v in g.neighbors(u) if v in split.y)


def _recognize_connected(
    g: Graph, beta: Optional[NajiAssignment], trace: list, depth: int
) -> Certificate:
    if len(g) <= 1:
        return _positive(ChordDiagram(tuple(g.vertices) * 2), trace)
    if beta is None:
        result = default_solution(g)
        if isinstance(result, InfeasibilityWitness):
            return Certificate(NOT_CIRCLE, infeasibility=result, trace=tuple(trace))
        beta = result
    built = build_diagram(g, beta)
    if not isinstance(built, NonChordal):
        return _positive(built.unoriented(), trace)

    obs = find_obstruction(g, beta)
    obs_split = canonical_obstruction_split(obs)
    split = extend_split(g, beta, obs, obs_split)
    x, y = _least_crossing_edge(g, split)
    trace.append(
        {
            "depth": depth,
            "vertices": g.sorted_vertices(),
            "obstruction": obs.to_json(),
            "obstruction_split": obs_split.to_json(),
            "split": split.to_json(),
            "edge": [x, y],
        }
    )
    left = _recognize_connected(g.induced_subgraph(split.x | {y}), None, trace, depth + 1)
    right = _recognize_connected(g.induced_subgraph(split.y | {x}), None, trace, depth + 1)
    if not (left.is_circle and right.is_circle):
        raise InternalError("a side of a split inherited a solution yet was rejected")
    glued = compose_split_diagrams(left.diagram, right.diagram, x, y, target=g)
    return _positive(glued, trace)


def recognize(g: Graph, beta: Optional[NajiAssignment] = None) -> Certificate:
    """Decide whether ``g`` is a circle graph and return a checkable certificate.

    ``beta`` optionally supplies the Naji solution used for a connected
    ``g`` instead of the solver's; it must satisfy the system.
    """
    if beta is not None:
        if not g.is_connected():
            raise ValueError("a starting solution is only accepted for connected graphs")
        if verify(g, beta):
            raise ValueError("starting assignment violates the Naji system")
    trace: list = []
    comps = g.connected_components()
    if len(comps) <= 1:
        return _recognize_connected(g, beta, trace, 0)
    word: list[str] = []
    for comp in comps:
        sub = _recognize_connected(g.induced_subgraph(comp), None, trace, 0)
        if not sub.is_circle:
            return Certificate(NOT_CIRCLE, infeasibility=sub.infeasibility, trace=tuple(trace))
        word.extend(sub.diagram.word)
    return _positive(ChordDiagram(tuple(word)), trace)


def check_certificate(g: Graph, cert: Certificate) -> bool:
    """Audit a certificate against ``g`` from scratch."""
    try:
        if cert.verdict == CIRCLE:
            return cert.diagram is not None and cert.diagram.interlacement_graph() == g
        if cert.verdict == NOT_CIRCLE:
            return cert.infeasibility is not None and check_witness(build_system(g), cert.infeasibility)
    except (ValueError, KeyError):
        return False
    return False
