"""Chord diagrams: interlacement, orientation values, incremental construction.

A diagram is a circular word of endpoint tokens read clockwise. In the
oriented form each token is ``(vertex, end)`` with ``end`` either HEAD or
TAIL. Gap ``i`` of a diagram with ``2m`` tokens is the space immediately
before token ``i``; gap 0 is therefore also the space after the last token.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph, InternalError
from .naji import NajiAssignment, reorient, restrict

HEAD = "+"
TAIL = "-"

Token = tuple[str, str]


def _positions(word: Sequence[str]) -> dict[str, list[int]]:
    pos: dict[str, list[int]] = {}
    for i, v in enumerate(word):
        pos.setdefault(v, []).append(i)
    for v, ps in pos.items():
        if len(ps) != 2:
            raise ValueError(f"chord {v!r} has {len(ps)} endpoints, expected 2")
    return pos


def _interlacement(word: Sequence[str]) -> Graph:
    pos = _positions(word)
    order = list(dict.fromkeys(word))
    edges = []
    for i, u in enumerate(order):
        a, b = pos[u]
        for v in order[i + 1 :]:
            c, d = pos[v]
            if (a < c < b) != (a < d < b):
                edges.append((u, v))
    return Graph.from_edges(edges, sorted(order))


def _least_rotation(seq: Sequence) -> tuple:
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True)
class ChordDiagram:
    """Unoriented diagram as a double occurrence word."""

    word: tuple[str, ...]

    def __post_init__(self) -> None:
        _positions(self.word)

    @classmethod
    def parse(cls, text: str) -> "ChordDiagram":
        return cls(tuple(text.split()))

    def __str__(self) -> str:
        return " ".join(self.word)

    def __len__(self) -> int:
        return len(self.word)

    @property
    def chords(self) -> list[str]:
        return sorted(set(self.word))

    def interlacement_graph(self) -> Graph:
        return _interlacement(self.word)

    def canonical(self) -> str:
        """Least rotation of the word, space separated."""
        return " ".join(_least_rotation(self.word))

    def relabel(self, mapping) -> "ChordDiagram":
        return ChordDiagram(tuple(str(mapping[v]) for v in self.word))

    def rotated_to(self, v: str) -> tuple[str, ...]:
        i = self.word.index(v)
        return self.word[i:] + self.word[:i]

    def reflected(self) -> "ChordDiagram":
        return ChordDiagram(self.word[::-1])


@dataclass(frozen=True)
class OrientedChordDiagram:
    tokens: tuple[Token, ...]

    def __post_init__(self) -> None:
        seen: dict[str, set[str]] = {}
        for v, end in self.tokens:
            if end not in (HEAD, TAIL):
                raise ValueError(f"bad endpoint kind {end!r}")
            ends = seen.setdefault(v, set())
            if end in ends:
                raise ValueError(f"chord {v!r} has two {'heads' if end == HEAD else 'tails'}")
            ends.add(end)
        for v, ends in seen.items():
            if len(ends) != 2:
                raise ValueError(f"chord {v!r} lacks a head or a tail")

    @classmethod
    def parse(cls, text: str) -> "OrientedChordDiagram":
        """Parse ``v+`` (head) / ``v-`` (tail) tokens."""
        toks = []
        for t in text.split():
            if len(t) < 2 or t[-1] not in (HEAD, TAIL):
                raise ValueError(f"bad oriented token {t!r}")
            toks.append((t[:-1], t[-1]))
        return cls(tuple(toks))

    @classmethod
    def from_word(cls, word: Iterable[str]) -> "OrientedChordDiagram":
        """Orient each chord head-first in clockwise order."""
        seen: set[str] = set()
        toks = []
        for v in word:
            toks.append((v, TAIL if v in seen else HEAD))
            seen.add(v)
        return cls(tuple(toks))

    def __str__(self) -> str:
        return " ".join(v + e for v, e in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def chords(self) -> list[str]:
        return sorted({v for v, _ in self.tokens})

    def unoriented(self) -> ChordDiagram:
        return ChordDiagram(tuple(v for v, _ in self.tokens))

    def interlacement_graph(self) -> Graph:
        return _interlacement([v for v, _ in self.tokens])

    def ends(self) -> dict[str, tuple[int, int]]:
        """``chord -> (head position, tail position)``."""
        head, tail = {}, {}
        for i, (v, e) in enumerate(self.tokens):
            (head if e == HEAD else tail)[v] = i
        return {v: (head[v], tail[v]) for v in head}

    def reversed_chord(self, c: str) -> "OrientedChordDiagram":
        flip = {HEAD: TAIL, TAIL: HEAD}
        return OrientedChordDiagram(tuple((v, flip[e]) if v == c else (v, e) for v, e in self.tokens))

    def right_gaps(self, v: str) -> frozenset[int]:
        """Gaps met travelling clockwise from the head of ``v`` to its tail."""
        h, t = self.ends()[v]
        size = len(self.tokens)
        return frozenset((h + k) % size for k in range(1, (t - h) % size + 1))

    def canonical_encoding(self) -> str:
        return " ".join(v + e for v, e in _least_rotation(self.tokens))


def interlacement_graph(d: Union[ChordDiagram, OrientedChordDiagram]) -> Graph:
    return d.interlacement_graph()


def canonical_encoding(d: OrientedChordDiagram) -> str:
    return d.canonical_encoding()


def _in_open_arc(p: int, start: int, end: int, size: int) -> bool:
    """Is position ``p`` strictly inside the clockwise arc from ``start`` to ``end``?"""
    return 0 < (p - start) % size < (end - start) % size


def beta_from_diagram(d: OrientedChordDiagram) -> NajiAssignment:
    """``b(v, w) = 0`` iff the head of ``w`` lies clockwise between the head and tail of ``v``."""
    g = d.interlacement_graph()
    ends = d.ends()
    size = len(d.tokens)
    values = {}
    for v, (hv, tv) in ends.items():
        for w, (hw, _) in ends.items():
            if v != w:
                values[(v, w)] = 0 if _in_open_arc(hw, hv, tv, size) else 1
    return NajiAssignment(g, values)


@dataclass(frozen=True)
class GapSet:
    diagram_size: int
    gaps: frozenset[int]

    def __len__(self) -> int:
        return len(self.gaps)

    def __bool__(self) -> bool:
        return bool(self.gaps)

    def only(self) -> int:
        if len(self.gaps) != 1:
            raise InternalError(f"expected exactly one gap, found {sorted(self.gaps)}")
        return next(iter(self.gaps))


def _allowed(d: OrientedChordDiagram, beta: NajiAssignment, c: str) -> GapSet:
    size = len(d.tokens)
    everything = frozenset(range(size))
    allowed = everything
    for v in d.chords:
        right = d.right_gaps(v)
        allowed &= right if beta[(v, c)] == 0 else everything - right
    return GapSet(size, allowed)


def per_vertex_gaps(d: OrientedChordDiagram, beta: NajiAssignment, c: str) -> dict[str, frozenset[int]]:
    """Head placements for ``c`` that each individual chord permits."""
    everything = frozenset(range(len(d.tokens)))
    out = {}
    for v in d.chords:
        right = d.right_gaps(v)
        out[v] = right if beta[(v, c)] == 0 else everything - right
    return out


def feasible_gaps(d: OrientedChordDiagram, beta: NajiAssignment, c: str) -> tuple[GapSet, GapSet]:
    """Gaps allowed for the head and for the tail of a new chord ``c``."""
    if any(v == c for v, _ in d.tokens):
        raise ValueError(f"chord {c!r} already present")
    return _allowed(d, beta, c), _allowed(d, reorient(beta, c), c)


def insert_chord(d: OrientedChordDiagram, c: str, tail_gap: int, head_gap: int) -> OrientedChordDiagram:
    size = len(d.tokens)
    if any(v == c for v, _ in d.tokens):
        raise ValueError(f"chord {c!r} already present")
    if tail_gap == head_gap:
        raise ValueError("head and tail gaps coincide")
    if size == 0:
        raise ValueError("use OrientedChordDiagram(((c, HEAD), (c, TAIL))) to start a diagram")
    for gap in (tail_gap, head_gap):
        if not 0 <= gap < size:
            raise ValueError(f"gap {gap} out of range for {size} tokens")
    out: list[Token] = []
    for i, tok in enumerate(d.tokens):
        if i == tail_gap:
            out.append((c, TAIL))
        if i == head_gap:
            out.append((c, HEAD))
        out.append(tok)
    return OrientedChordDiagram(tuple(out))


@dataclass(frozen=True)
class NonChordal:
    """Construction got stuck adding ``failing`` to the diagram on ``prefix``."""

    prefix: tuple[str, ...]
    failing: str
    diagram: OrientedChordDiagram
    head_empty: bool


def build_diagram(
    g: Graph,
    beta: NajiAssignment,
    order: Optional[Sequence[str]] = None,
    trace: Optional[list] = None,
) -> Union[OrientedChordDiagram, NonChordal]:
    """Grow the unique oriented diagram for ``(g, beta)`` one chord at a time.

    ``order`` must list the vertices so that every prefix is connected; it
    defaults to ``g.elimination_order()``. When ``trace`` is a list the
    sizes of the head and tail gap sets at each step are appended to it.
    """
    if not g.vertices:
        return OrientedChordDiagram(())
    order = list(order) if order is not None else g.elimination_order()
    if sorted(order) != g.sorted_vertices():
        raise ValueError("order must be a permutation of the vertices")
    first = order[0]
    d = OrientedChordDiagram(((first, HEAD), (first, TAIL)))
    for i in range(1, len(order)):
        c = order[i]
        prefix = order[: i + 1]
        if not g.induced_subgraph(prefix).is_connected():
            raise ValueError(f"prefix ending at {c!r} is not connected")
        local = restrict(beta, prefix)
        heads, tails = feasible_gaps(d, local, c)
        if trace is not None:
            trace.append((c, len(heads), len(tails)))
        if not heads or not tails:
            return NonChordal(tuple(order[:i]), c, d, head_empty=not heads)
        if len(heads) > 1 or len(tails) > 1:
            raise InternalError(f"gap sets at {c!r} are not single gaps: {heads}, {tails}")
        if heads.gaps == tails.gaps:
            raise InternalError(f"head and tail gap coincide at {c!r}")
        d = insert_chord(d, c, tails.only(), heads.only())
    return d


def blocking_chords(failure: NonChordal, beta: NajiAssignment) -> list[str]:
    """Chords of a minimal family whose constraints on the stuck end cannot all hold.

    The complements of the per-chord placement arcs cover the circle; the
    returned chords are a minimal cyclic cover of it.
    """
    from .obstruction import minimal_cover

    d, c = failure.diagram, failure.failing
    local = restrict(beta, failure.prefix + (c,))
    if not failure.head_empty:
        local = reorient(local, c)
    size = len(d.tokens)
    # points 2i are gaps, points 2i+1 are tokens; the forbidden region of a
    # chord is a closed arc from one of its tokens to the other
    arcs = []
    chords = []
    for v, allowed in per_vertex_gaps(d, local, c).items():
        gaps = sorted(allowed)
        start = next(g for g in gaps if (g - 1) % size not in allowed)
        length = len(gaps)
        first_tok = (start + length - 1) % size
        last_tok = (start - 1) % size
        arcs.append((2 * first_tok + 1, 2 * last_tok + 1))
        chords.append(v)
    cover = minimal_cover(arcs, 2 * size)
    return [chords[i] for i in cover.indices]
