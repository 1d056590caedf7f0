"""Simple undirected graphs with string labels, plus ingestion and split tests."""

from __future__ import annotations

import warnings
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Optional


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed."""


class InternalError(RuntimeError):
    """A guarantee of the underlying theory failed; indicates a bug."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    ``vertices`` keeps insertion order (used for printing and serialization);
    every algorithm that needs determinism sorts labels lexicographically.
    """

    vertices: tuple[str, ...]
    adjacency: Mapping[str, frozenset[str]]

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[object, object]], vertices: Iterable[object] = ()
    ) -> "Graph":
        order: dict[str, None] = {}
        for v in vertices:
            order[str(v)] = None
        adj: dict[str, set[str]] = {}
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            order.setdefault(u, None)
            order.setdefault(v, None)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(tuple(order), {v: frozenset(adj.get(v, ())) for v in order})

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        vs = set(self.vertices)
        if set(self.adjacency) != vs:
            raise ValueError("adjacency keys do not match vertices")
        for v, nbrs in self.adjacency.items():
            if v in nbrs:
                raise ValueError(f"self-loop at {v!r}")
            for w in nbrs:
                if w not in vs or v not in self.adjacency[w]:
                    raise ValueError(f"asymmetric adjacency at {v!r}-{w!r}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.adjacency

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edge_set()))

    def __repr__(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.edges())
        return f"Graph(V={list(self.vertices)}, E=[{edges}])"

    def neighbors(self, v: str) -> frozenset[str]:
        return self.adjacency[v]

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adjacency[u]

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def edges(self) -> list[tuple[str, str]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u in self.adjacency for v in self.adjacency[u] if u < v)

    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges())

    @property
    def n_edges(self) -> int:
        return sum(len(n) for n in self.adjacency.values()) // 2

    def induced_subgraph(self, s: Iterable[str]) -> "Graph":
        keep = set(s)
        unknown = keep - set(self.vertices)
        if unknown:
            raise KeyError(f"unknown vertices {sorted(unknown)}")
        verts = tuple(v for v in self.vertices if v in keep)
        return Graph(verts, {v: self.adjacency[v] & keep for v in verts})

    def remove_vertices(self, s: Iterable[str]) -> "Graph":
        drop = set(s)
        return self.induced_subgraph(v for v in self.vertices if v not in drop)

    def connected_components(self) -> list[list[str]]:
        """Vertex sets of the components, each sorted, ordered by least vertex."""
        seen: set[str] = set()
        comps = []
        for root in self.sorted_vertices():
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def elimination_order(self) -> list[str]:
        """Order whose every prefix induces a connected subgraph.

        Built by repeatedly deleting the least-labelled vertex whose removal
        keeps the rest connected, then reversing the deletion sequence.
        """
        if not self.vertices:
            raise ValueError("elimination order of the empty graph")
        if not self.is_connected():
            raise ValueError("graph is disconnected")
        remaining = self
        removed = []
        while len(remaining) > 1:
            for v in remaining.sorted_vertices():
                rest = remaining.remove_vertices([v])
                if rest.is_connected():
                    removed.append(v)
                    remaining = rest
                    break
            else:  # pragma: no cover - every connected graph has a non-cut vertex
                raise InternalError("no non-cut vertex found")
        removed.append(remaining.vertices[0])
        return removed[::-1]

    def is_split(self, x: Iterable[str], y: Iterable[str]) -> bool:
        x, y = set(x), set(y)
        if x & y or x | y != set(self.vertices) or len(x) < 2 or len(y) < 2:
            return False
        crossing = {(u, v) for u in x for v in self.adjacency[u] if v in y}
        bx = {u for u, _ in crossing}
        by = {v for _, v in crossing}
        return len(crossing) == len(bx) * len(by)

    def to_edgelist(self) -> str:
        lines = [f"{u} {v}" for u, v in self.edges()]
        lines += [v for v in self.vertices if not self.adjacency[v]]
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class Split:
    """A bipartition ``(x, y)`` of a graph's vertex set."""

    x: frozenset[str]
    y: frozenset[str]

    @classmethod
    def of(cls, x: Iterable[str], y: Iterable[str]) -> "Split":
        return cls(frozenset(x), frozenset(y))

    def swapped(self) -> "Split":
        return Split(self.y, self.x)

    def to_json(self) -> dict:
        return {"X": sorted(self.x), "Y": sorted(self.y)}


def complete_graph(labels: Iterable[object]) -> Graph:
    labels = [str(v) for v in labels]
    return Graph.from_edges(
        ((u, v) for i, u in enumerate(labels) for v in labels[i + 1 :]), labels
    )


def cycle_graph(labels: Iterable[object]) -> Graph:
    labels = [str(v) for v in labels]
    return Graph.from_edges(zip(labels, labels[1:] + labels[:1]), labels)


def path_graph(labels: Iterable[object]) -> Graph:
    labels = [str(v) for v in labels]
    return Graph.from_edges(zip(labels, labels[1:]), labels)


def parse_edgelist(text: str) -> Graph:
    order: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            order.setdefault(parts[0], None)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = parts
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u!r}")
        order.setdefault(u, None)
        order.setdefault(v, None)
        key = frozenset((u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {u} {v} ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(edges, order)


def _graph6_size(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        chunk, rest = data[2:8], data[8:]
    else:
        chunk, rest = data[1:4], data[4:]
    n = 0
    for byte in chunk:
        n = (n << 6) | (byte - 63)
    return n, rest


def parse_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    data = line.encode("ascii", errors="replace")
    for byte in data:
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"invalid graph6 byte {byte!r}")
    n, body = _graph6_size(data)
    n_bits = n * (n - 1) // 2
    if len(body) != (n_bits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(n_bits + 5) // 6}")
    bits = []
    for byte in body:
        val = byte - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    labels = [str(i) for i in range(n)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((labels[i], labels[j]))
            k += 1
    return Graph.from_edges(edges, labels)


def to_graph6(g: Graph) -> str:
    """Encode using the graph's vertex order as indices 0..n-1."""
    n = len(g)
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    verts = g.vertices
    bits = [int(g.has_edge(verts[i], verts[j])) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) for i in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse ``text`` as ``edgelist`` or ``graph6`` (first non-blank line)."""
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError("no graph6 line found")
        return parse_graph6(lines[0])
    raise GraphFormatError(f"unknown format {format!r}")


def guess_format(path: str, explicit: Optional[str] = None) -> str:
    if explicit:
        return explicit
    return "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
