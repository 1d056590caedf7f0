"""The Naji system of a graph over GF(2).

Variables are the ordered pairs ``(u, v)`` of distinct vertices, indexed in
lexicographic order of the labels. Rows are int bitsets over that index.

Three row families exist for a graph G:

* NS1(v, w): ``b(v,w) + b(w,v) = 1`` for every edge vw;
* NS2(x, v, w): ``b(x,v) + b(x,w) = 0`` when vw is an edge and x sees neither end;
* NS3(x, v, w): ``b(v,w) + b(w,v) + b(x,v) + b(x,w) = 1`` when x sees both
  ends of the non-edge vw.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .graph import Graph

Pair = tuple[str, str]


@dataclass(frozen=True, order=True)
class RowTag:
    """Names the equation that generated a row; ``v < w`` always."""

    kind: str
    v: str
    w: str
    x: Optional[str] = None
    value: Optional[int] = None  # only for PIN rows

    def __str__(self) -> str:
        if self.kind == "NS1":
            return f"NS1({self.v},{self.w})"
        if self.kind == "PIN":
            return f"PIN({self.v},{self.w})={self.value}"
        return f"{self.kind}({self.x},{self.v},{self.w})"

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.x is not None:
            out["x"] = self.x
        out["v"] = self.v
        out["w"] = self.w
        if self.value is not None:
            out["value"] = self.value
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "RowTag":
        kind = obj["kind"]
        if kind not in ("NS1", "NS2", "NS3", "PIN"):
            raise ValueError(f"unknown row kind {kind!r}")
        x = obj.get("x")
        return cls(
            kind,
            str(obj["v"]),
            str(obj["w"]),
            None if x is None else str(x),
            obj.get("value"),
        )


@dataclass(frozen=True)
class LinearSystem:
    """Rows ``(mask, const)`` over pair variables, each with its tag."""

    graph: Graph
    pairs: tuple[Pair, ...]
    tags: tuple[RowTag, ...]
    masks: tuple[int, ...]
    consts: tuple[int, ...]
    index: Mapping[Pair, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.tags)

    def row(self, tag: RowTag) -> tuple[int, int]:
        """Bitset and constant of the row named ``tag``."""
        i = self._row_lookup().get(tag)
        if i is None:
            raise KeyError(f"{tag} is not a row of this system")
        return self.masks[i], self.consts[i]

    def _row_lookup(self) -> dict[RowTag, int]:
        cache = self.__dict__.get("_lookup")
        if cache is None:
            cache = {t: i for i, t in enumerate(self.tags)}
            object.__setattr__(self, "_lookup", cache)
        return cache

    def pin_row(self, u: str, v: str, value: int) -> tuple[RowTag, int, int]:
        return RowTag("PIN", u, v, value=value), 1 << self.index[(u, v)], value & 1


def pair_index(g: Graph) -> tuple[tuple[Pair, ...], dict[Pair, int]]:
    verts = g.sorted_vertices()
    pairs = tuple((u, v) for u in verts for v in verts if u != v)
    return pairs, {p: i for i, p in enumerate(pairs)}


def build_system(g: Graph) -> LinearSystem:
    pairs, index = pair_index(g)
    verts = g.sorted_vertices()
    rows: list[tuple[RowTag, int, int]] = []

    def bit(u: str, v: str) -> int:
        return 1 << index[(u, v)]

    for v, w in combinations(verts, 2):
        if g.has_edge(v, w):
            rows.append((RowTag("NS1", v, w), bit(v, w) | bit(w, v), 1))
            for x in verts:
                if x != v and x != w and not g.has_edge(x, v) and not g.has_edge(x, w):
                    rows.append((RowTag("NS2", v, w, x), bit(x, v) | bit(x, w), 0))
        else:
            for x in g.neighbors(v) & g.neighbors(w):
                mask = bit(v, w) ^ bit(w, v) ^ bit(x, v) ^ bit(x, w)
                rows.append((RowTag("NS3", v, w, x), mask, 1))
    rows.sort(key=lambda r: r[0])
    return LinearSystem(
        graph=g,
        pairs=pairs,
        tags=tuple(r[0] for r in rows),
        masks=tuple(r[1] for r in rows),
        consts=tuple(r[2] for r in rows),
        index=index,
    )


@dataclass(frozen=True)
class NajiAssignment:
    """A GF(2) value for every ordered pair of distinct vertices of ``graph``."""

    graph: Graph
    values: Mapping[Pair, int]

    def __post_init__(self) -> None:
        n = len(self.graph)
        if len(self.values) != n * (n - 1):
            raise ValueError("assignment must cover every ordered pair exactly once")
        for (u, v), b in self.values.items():
            if u == v or u not in self.graph or v not in self.graph:
                raise ValueError(f"invalid pair {(u, v)!r}")
            if b not in (0, 1):
                raise ValueError(f"value {b!r} at {(u, v)!r} is not in GF(2)")

    def __getitem__(self, pair: Pair) -> int:
        return self.values[pair]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NajiAssignment):
            return NotImplemented
        return self.graph == other.graph and dict(self.values) == dict(other.values)

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_table(cls, g: Graph, table: Mapping[str, Mapping[str, int]]) -> "NajiAssignment":
        """Build from a row-major table ``table[u][v] = b(u, v)``."""
        return cls(g, {(str(u), str(v)): int(b) for u, row in table.items() for v, b in row.items()})

    def as_bits(self, index: Mapping[Pair, int]) -> int:
        out = 0
        for p, b in self.values.items():
            if b:
                out |= 1 << index[p]
        return out

    def to_text(self) -> str:
        verts = self.graph.sorted_vertices()
        return "".join(f"{u} {v} {self.values[(u, v)]}\n" for u in verts for v in verts if u != v)


@dataclass(frozen=True)
class InfeasibilityWitness:
    """Rows whose GF(2) sum reads ``0 = 1``."""

    rows: tuple[RowTag, ...]

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.rows]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "InfeasibilityWitness":
        return cls(tuple(RowTag.from_json(d) for d in data))


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def solve(
    system: LinearSystem, pins: Optional[Mapping[Pair, int]] = None
) -> Union[NajiAssignment, InfeasibilityWitness]:
    """Gaussian elimination with proof logging.

    Each basis row carries the set of input rows it was summed from, so an
    inconsistency immediately yields a checkable witness. ``pins`` adds
    unit rows fixing chosen variables. Free variables are set to 0.
    """
    tags = list(system.tags)
    masks = list(system.masks)
    consts = list(system.consts)
    for (u, v), b in sorted((pins or {}).items()):
        tag, mask, const = system.pin_row(u, v, b)
        tags.append(tag)
        masks.append(mask)
        consts.append(const)

    # pivot column (lowest set bit) -> (mask, const, combination of input rows)
    basis: dict[int, tuple[int, int, int]] = {}
    for i, (mask, const) in enumerate(zip(masks, consts)):
        combo = 1 << i
        while mask:
            low = (mask & -mask).bit_length() - 1
            piv = basis.get(low)
            if piv is None:
                basis[low] = (mask, const, combo)
                break
            mask ^= piv[0]
            const ^= piv[1]
            combo ^= piv[2]
        else:
            if const:
                return InfeasibilityWitness(tuple(tags[j] for j in _bits(combo)))

    solution = 0
    for col in sorted(basis, reverse=True):
        mask, const, _ = basis[col]
        if (const ^ bin(mask & solution).count("1")) & 1:
            solution |= 1 << col
    values = {p: (solution >> i) & 1 for i, p in enumerate(system.pairs)}
    return NajiAssignment(system.graph, values)


def check_witness(system: LinearSystem, witness: InfeasibilityWitness) -> bool:
    """True iff every cited row exists and the rows sum to ``0 = 1``."""
    mask = const = 0
    for tag in witness.rows:
        if tag.kind == "PIN":
            if tag.value not in (0, 1) or (tag.v, tag.w) not in system.index:
                return False
            _, m, c = system.pin_row(tag.v, tag.w, tag.value)
        else:
            try:
                m, c = system.row(tag)
            except KeyError:
                return False
        mask ^= m
        const ^= c
    return mask == 0 and const == 1


def verify(g: Graph, beta: NajiAssignment, system: Optional[LinearSystem] = None) -> list[RowTag]:
    """Tags of every Naji row that ``beta`` violates."""
    if beta.graph != g:
        raise ValueError("assignment belongs to a different graph")
    system = system or build_system(g)
    sol = beta.as_bits(system.index)
    return [
        tag
        for tag, mask, const in zip(system.tags, system.masks, system.consts)
        if bin(mask & sol).count("1") & 1 != const
    ]


def reorient(beta: NajiAssignment, c: str) -> NajiAssignment:
    """Add the offset that corresponds to reversing chord ``c``."""
    g = beta.graph
    if c not in g:
        raise KeyError(f"unknown vertex {c!r}")
    values = dict(beta.values)
    for v in g.vertices:
        if v == c:
            continue
        values[(c, v)] ^= 1
        if g.has_edge(v, c):
            values[(v, c)] ^= 1
    return NajiAssignment(g, values)


def restrict(beta: NajiAssignment, s: Iterable[str]) -> NajiAssignment:
    sub = beta.graph.induced_subgraph(s)
    keep = set(sub.vertices)
    return NajiAssignment(
        sub, {(u, v): b for (u, v), b in beta.values.items() if u in keep and v in keep}
    )


def parse_beta(text: str, g: Graph) -> NajiAssignment:
    """Read ``u v 0|1`` lines; every ordered pair of ``g`` must appear once."""
    values: dict[Pair, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[2] not in ("0", "1"):
            raise ValueError(f"line {lineno}: expected 'u v 0|1', got {raw!r}")
        u, v, b = parts
        if u not in g or v not in g or u == v:
            raise ValueError(f"line {lineno}: invalid pair {u} {v}")
        if (u, v) in values:
            raise ValueError(f"line {lineno}: pair {u} {v} given twice")
        values[(u, v)] = int(b)
    missing = [(u, v) for u in g.vertices for v in g.vertices if u != v and (u, v) not in values]
    if missing:
        u, v = missing[0]
        raise ValueError(f"missing value for pair {u} {v} ({len(missing)} missing)")
    return NajiAssignment(g, values)


def witness_json(witness: InfeasibilityWitness) -> str:
    return json.dumps(witness.to_json())
