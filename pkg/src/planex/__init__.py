"""Exhaustive verification of extremal subgraph counts in planar graphs."""

from __future__ import annotations

from .canon import canonical_code, canonical_relabel
from .census import CensusRecord, run_census
from .counting import (
    PatternSpec,
    TypeBreakdown,
    classify_p4_at_vertex,
    count_c4,
    count_k2k,
    count_p4_at_vertex,
    count_p4_lemma,
    count_paths_bruteforce,
    count_pattern,
    count_star,
    count_star_edges,
    count_triangles,
)
from .embedding import Embedding, link_cycle
from .enumerate import (
    Flip,
    TriangulationSet,
    apply_flip,
    brute_force_triangulations,
    enumerate_triangulations,
    legal_flips,
)
from .errors import DomainError, GraphError
from .families import (
    ApollonianCertificate,
    is_apollonian,
    make_apollonian,
    make_fig1b,
    make_fig1c,
    make_fn,
    make_nine_vertex_fixtures,
    make_octahedron,
)
from .formats import from_edgelist, from_graph6, to_edgelist, to_graph6
from .formulas import f_c3, f_c4, f_k2k, f_p2, f_p3, f_p4, f_star, lemma2_bound
from .graph import Graph, build_graph
from .planarity import embed, is_maximal_planar, is_planar
from .verify import Report, verify_all

__all__ = [
    "ApollonianCertificate", "CensusRecord", "DomainError", "Embedding", "Flip", "Graph",
    "GraphError", "PatternSpec", "Report", "TriangulationSet", "TypeBreakdown",
    "apply_flip", "brute_force_triangulations", "build_graph", "canonical_code",
    "canonical_relabel", "classify_p4_at_vertex", "count_c4", "count_k2k",
    "count_p4_at_vertex", "count_p4_lemma", "count_paths_bruteforce", "count_pattern",
    "count_star", "count_star_edges", "count_triangles", "embed", "enumerate_triangulations",
    "f_c3", "f_c4", "f_k2k", "f_p2", "f_p3", "f_p4", "f_star", "from_edgelist", "from_graph6",
    "is_apollonian", "is_maximal_planar", "is_planar", "legal_flips", "lemma2_bound",
    "link_cycle", "make_apollonian", "make_fig1b", "make_fig1c", "make_fn",
    "make_nine_vertex_fixtures", "make_octahedron", "run_census", "to_edgelist", "to_graph6",
    "verify_all",
]
