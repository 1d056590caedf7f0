"""Recognize circle graphs and audit their certificates from the command line.

Exit status: 0 for a circle graph or a passed check, 1 for a non-circle
graph or a failed check, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from .diagram import ChordDiagram, NonChordal, build_diagram
from .graph import Graph, GraphFormatError, guess_format, parse_graph, to_graph6
from .naji import InfeasibilityWitness, build_system, parse_beta, restrict, solve, verify
from .obstruction import find_obstruction
from .oracle import ORACLE_MAX, oracle_find
from .recognize import check_certificate, recognize

log = logging.getLogger("circlegraph")

COMMANDS = ("recognize", "solve", "verify", "obstruct", "oracle", "render")


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized sweeps")
    p = argparse.ArgumentParser(prog="circlegraph", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("input", help="graph file ('-' for stdin)")
        sp.add_argument("--format", choices=("edgelist", "graph6"), help="default: by file extension")

    sp = sub.add_parser("recognize", parents=[common], help="decide circle-graph membership with a certificate")
    graph_input(sp)
    sp.add_argument("--certificate", type=Path, help="write certificate JSON here instead of stdout")
    sp.add_argument("--svg", type=Path, help="render the chord diagram of a positive answer")

    sp = sub.add_parser("solve", parents=[common], help="solve the Naji system")
    graph_input(sp)

    sp = sub.add_parser("verify", parents=[common], help="check an assignment file against the Naji system")
    graph_input(sp)
    sp.add_argument("beta", type=Path)

    sp = sub.add_parser("obstruct", parents=[common], help="find a Claw/K4 obstruction for a non-chordal assignment")
    graph_input(sp)
    sp.add_argument("beta", type=Path)

    sp = sub.add_parser("oracle", parents=[common], help="brute-force diagram search")
    sp.add_argument("input", nargs="?", help="graph file; omit with --random")
    sp.add_argument("--format", choices=("edgelist", "graph6"))
    sp.add_argument("--max-n", type=int, default=ORACLE_MAX)
    sp.add_argument("--random", type=int, metavar="COUNT", help="compare recognize and oracle on random graphs")
    sp.add_argument("--vertices", type=int, default=6)
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--report", type=Path, help="tab-separated sweep output (default stdout)")
    sp.add_argument("--figure", type=Path, help="summary figure for the sweep")

    sp = sub.add_parser("render", parents=[common], help="draw a chord diagram")
    sp.add_argument("diagram", help="double occurrence word, or a file containing one")
    sp.add_argument("-o", "--output", type=Path, required=True)
    sp.add_argument("--title")
    return p


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str, fmt: Optional[str]) -> Graph:
    return parse_graph(_read_text(path), guess_format(path, fmt))


def _load_beta(path: Path, g: Graph):
    return parse_beta(_read_text(str(path)), g)


def cmd_recognize(args, out) -> int:
    g = _load_graph(args.input, args.format)
    cert = recognize(g)
    if not check_certificate(g, cert):  # pragma: no cover - would be a library bug
        print("error: produced certificate failed its own check", file=sys.stderr)
        return 2
    print(cert.verdict, file=out)
    text = cert.dumps()
    if args.certificate:
        args.certificate.write_text(text + "\n", encoding="utf-8")
    else:
        print(text, file=out)
    if args.svg and cert.is_circle:
        from .render import render_diagram

        render_diagram(cert.diagram, args.svg)
    return 0 if cert.is_circle else 1


def cmd_solve(args, out) -> int:
    g = _load_graph(args.input, args.format)
    result = solve(build_system(g))
    if isinstance(result, InfeasibilityWitness):
        print("infeasible", file=out)
        print(json.dumps(result.to_json()), file=out)
        return 1
    out.write(result.to_text())
    return 0


def cmd_verify(args, out) -> int:
    g = _load_graph(args.input, args.format)
    beta = _load_beta(args.beta, g)
    bad = verify(g, beta)
    print(f"{len(bad)} violations", file=out)
    for tag in bad:
        print(tag, file=out)
    return 0 if not bad else 1


def cmd_obstruct(args, out) -> int:
    g = _load_graph(args.input, args.format)
    beta = _load_beta(args.beta, g)
    bad = verify(g, beta)
    if bad:
        print(f"assignment violates {len(bad)} rows; not a solution", file=out)
        return 1
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        local = restrict(beta, comp)
        if isinstance(build_diagram(sub, local), NonChordal):
            print(json.dumps(find_obstruction(sub, local).to_json()), file=out)
            return 0
    print("assignment is chordal; no obstruction", file=out)
    return 1


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    verts = [str(i) for i in range(n)]
    edges = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1 :] if rng.random() < p]
    return Graph.from_edges(edges, verts)


def _cell(value) -> str:
    return str(value).lower() if isinstance(value, bool) else str(value)


def cmd_oracle(args, out) -> int:
    if args.random is None:
        if args.input is None:
            raise UsageError("oracle needs an input graph or --random COUNT")
        g = _load_graph(args.input, args.format)
        found = oracle_find(g, max_n=args.max_n)
        if found is None:
            print("not-circle", file=out)
            return 1
        print("circle", file=out)
        print(found, file=out)
        return 0

    if args.vertices > args.max_n:
        raise UsageError(f"--vertices {args.vertices} exceeds --max-n {args.max_n}")
    rng = random.Random(args.seed)
    rows = []
    for _ in range(args.random):
        g = _random_graph(rng, args.vertices, args.density)
        verdict = recognize(g).verdict
        brute = "circle" if oracle_find(g, max_n=args.max_n) is not None else "not-circle"
        rows.append(
            {
                "graph6": to_graph6(g),
                "vertices": len(g),
                "edges": g.n_edges,
                "recognize": verdict,
                "oracle": brute,
                "agree": verdict == brute,
            }
        )
    header = ("graph6", "vertices", "edges", "recognize", "oracle", "agree")
    lines = ["\t".join(header)] + [
        "\t".join(_cell(r[h]) for h in header) for r in rows
    ]
    if args.report:
        args.report.write_text("\n".join(lines) + "\n", encoding="utf-8")
    else:
        print("\n".join(lines), file=out)
    if args.figure:
        from .render import render_sweep

        render_sweep(rows, args.figure)
    disagreements = sum(not r["agree"] for r in rows)
    log.info("%d graphs, %d disagreements", len(rows), disagreements)
    return 0 if disagreements == 0 else 1


def cmd_render(args, out) -> int:
    text = args.diagram
    if Path(text).is_file():
        text = Path(text).read_text(encoding="utf-8")
    diagram = ChordDiagram.parse(text)
    from .render import render_diagram

    render_diagram(diagram, args.output, title=args.title)
    print(args.output, file=out)
    return 0


HANDLERS = {
    "recognize": cmd_recognize,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "obstruct": cmd_obstruct,
    "oracle": cmd_oracle,
    "render": cmd_render,
}


def run_cli(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.verbose = getattr(args, "verbose", 0)
    args.seed = getattr(args, "seed", 0)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        return HANDLERS[args.command](args, out)
    except (UsageError, GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
