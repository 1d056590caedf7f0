"""Brute-force ground truth by enumerating every chord diagram."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

from .diagram import ChordDiagram
from .graph import Graph

DEFAULT_GUARD = 8
ORACLE_MAX = 7


def _matchings(n: int) -> Iterator[list[int]]:
    """Yield ``partner`` arrays for every perfect matching of ``2n`` points."""
    size = 2 * n
    partner = [-1] * size

    def rec() -> Iterator[list[int]]:
        try:
            i = partner.index(-1)
        except ValueError:
            yield partner
            return
        for j in range(i + 1, size):
            if partner[j] == -1:
                partner[i], partner[j] = j, i
                yield from rec()
                partner[i] = partner[j] = -1

    yield from rec()


def _word(partner: list[int]) -> tuple[int, ...]:
    label = {}
    out = []
    for i, j in enumerate(partner):
        if i < j:
            label[i] = len(label)
            out.append(label[i])
        else:
            out.append(label[j])
    return tuple(out)


def enumerate_diagrams(n: int, guard: int = DEFAULT_GUARD, force: bool = False) -> Iterator[ChordDiagram]:
    """All ``(2n-1)!!`` diagrams on ``n`` chords named ``1..n`` by first endpoint."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > guard and not force:
        raise ValueError(f"n={n} exceeds the enumeration guard {guard}; pass force=True")
    for partner in _matchings(n):
        yield ChordDiagram(tuple(str(c + 1) for c in _word(partner)))


def _edge_bit(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    return 1 << (i * n + j)


@lru_cache(maxsize=None)
def _diagram_masks(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """``(edge mask, word)`` for each diagram on chords ``0..n-1``."""
    out = []
    for partner in _matchings(n):
        word = _word(partner)
        first = {}
        for i, c in enumerate(word):
            first.setdefault(c, i)
        mask = 0
        for c in range(n):
            a, b = first[c], partner[first[c]]
            for d in range(c + 1, n):
                p, q = first[d], partner[first[d]]
                if (a < p < b) != (a < q < b):
                    mask |= _edge_bit(c, d, n)
        out.append((mask, word))
    return tuple(out)


def oracle_find(g: Graph, max_n: int = ORACLE_MAX) -> Optional[ChordDiagram]:
    """A diagram whose interlacement graph is exactly ``g``, or None."""
    n = len(g)
    if n > max_n:
        raise ValueError(f"oracle limited to {max_n} vertices, graph has {n}")
    verts = g.sorted_vertices()
    if n == 0:
        return ChordDiagram(())
    by_mask: dict[int, tuple[str, ...]] = {}
    for perm in permutations(verts):
        pos = {v: i for i, v in enumerate(perm)}
        mask = 0
        for u, v in g.edges():
            mask |= _edge_bit(pos[u], pos[v], n)
        by_mask.setdefault(mask, perm)
    for mask, word in _diagram_masks(n):
        perm = by_mask.get(mask)
        if perm is not None:
            return ChordDiagram(tuple(perm[c] for c in word))
    return None
