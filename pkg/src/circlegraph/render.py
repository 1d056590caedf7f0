"""Matplotlib figures: chord diagrams and oracle sweep summaries."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .diagram import ChordDiagram  # noqa: E402

_RC = {
    "svg.hashsalt": "circlegraph",
    "svg.fonttype": "none",
    "font.size": 10,
    "font.family": "DejaVu Sans",
}


def chord_geometry(diagram: ChordDiagram) -> dict[str, tuple[tuple[float, float], tuple[float, float]]]:
    """Endpoint coordinates per chord on the unit circle.

    Points are evenly spaced clockwise from the top, in the order of the
    diagram's canonical rotation, so the picture depends only on that.
    """
    word = diagram.canonical().split()
    size = len(word)
    ends: dict[str, list[tuple[float, float]]] = {}
    for i, v in enumerate(word):
        angle = math.pi / 2 - 2 * math.pi * i / size
        ends.setdefault(v, []).append((round(math.cos(angle), 12), round(math.sin(angle), 12)))
    return {v: (p[0], p[1]) for v, p in ends.items()}


def _save(fig, path: Path) -> None:
    metadata = {"Date": None} if path.suffix == ".svg" else {}
    fig.savefig(path, metadata=metadata)
    plt.close(fig)


def render_diagram(diagram: ChordDiagram, path, title: str | None = None) -> Path:
    path = Path(path)
    geometry = chord_geometry(diagram)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4, 4))
        ax.add_patch(plt.Circle((0, 0), 1.0, fill=False, lw=1.2, color="0.3"))
        cmap = plt.get_cmap("tab10")
        for k, (v, (p, q)) in enumerate(sorted(geometry.items())):
            (line,) = ax.plot([p[0], q[0]], [p[1], q[1]], lw=1.8, color=cmap(k % 10))
            line.set_gid(f"chord-{v}")
            for x, y in (p, q):
                ax.plot([x], [y], "o", ms=3, color="0.2")
                ax.annotate(v, (x * 1.12, y * 1.12), ha="center", va="center")
        ax.set_xlim(-1.3, 1.3)
        ax.set_ylim(-1.3, 1.3)
        ax.set_aspect("equal")
        ax.axis("off")
        if title:
            ax.set_title(title)
        _save(fig, path)
    return path


def render_sweep(rows: Sequence[dict], path) -> Path:
    """Stacked bars of circle / non-circle verdicts per edge count; disagreements in red."""
    path = Path(path)
    circle = Counter(r["edges"] for r in rows if r["recognize"] == "circle")
    other = Counter(r["edges"] for r in rows if r["recognize"] != "circle")
    wrong = Counter(r["edges"] for r in rows if not r["agree"])
    xs = sorted(set(circle) | set(other))
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        ax.bar(xs, [circle[x] for x in xs], color="tab:blue", label="circle")
        ax.bar(xs, [other[x] for x in xs], bottom=[circle[x] for x in xs], color="tab:orange", label="not circle")
        if wrong:
            ax.scatter(list(wrong), [wrong[x] for x in wrong], color="red", zorder=3, label="disagreement")
        ax.set_xlabel("edges")
        ax.set_ylabel("graphs")
        ax.legend(frameon=False)
        fig.tight_layout()
        _save(fig, path)
    return path
