"""Certifying circle-graph recognition via Naji's linear system over GF(2)."""

from .diagram import (
    ChordDiagram,
    NonChordal,
    OrientedChordDiagram,
    beta_from_diagram,
    build_diagram,
    canonical_encoding,
    feasible_gaps,
    insert_chord,
    interlacement_graph,
)
from .graph import Graph, GraphFormatError, InternalError, Split, parse_graph
from .naji import (
    InfeasibilityWitness,
    LinearSystem,
    NajiAssignment,
    RowTag,
    build_system,
    reorient,
    restrict,
    solve,
    verify,
)
from .obstruction import Obstruction, find_obstruction, minimal_cover
from .oracle import enumerate_diagrams, oracle_find
from .recognize import Certificate, check_certificate, default_solution, recognize

__all__ = [
    "Certificate",
    "ChordDiagram",
    "Graph",
    "GraphFormatError",
    "InfeasibilityWitness",
    "InternalError",
    "LinearSystem",
    "NajiAssignment",
    "NonChordal",
    "Obstruction",
    "OrientedChordDiagram",
    "RowTag",
    "Split",
    "beta_from_diagram",
    "build_diagram",
    "build_system",
    "canonical_encoding",
    "check_certificate",
    "default_solution",
    "enumerate_diagrams",
    "feasible_gaps",
    "find_obstruction",
    "insert_chord",
    "interlacement_graph",
    "minimal_cover",
    "oracle_find",
    "parse_graph",
    "recognize",
    "reorient",
    "restrict",
    "solve",
    "verify",
]
