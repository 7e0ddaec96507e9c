from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from planex.counting import (
    PatternSpec,
    classify_p4_at_vertex,
    count_c4,
    count_k2k,
    count_p4_at_vertex,
    count_p4_lemma,
    count_paths_bruteforce,
    count_pattern,
    count_pattern_bruteforce,
    count_star,
    count_star_edges,
    count_triangles,
    second_apex,
)
from planex.errors import GraphError
from planex.families import make_fn, make_octahedron
from planex.graph import build_graph, complete_graph, cycle_graph
from planex.planarity import embed
from planex.verify import per_vertex_violations


@st.composite
def random_graphs(draw, max_n: int = 10):
    n = draw(st.integers(1, max_n))
    density = draw(st.floats(0.1, 0.9))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density])


PATTERNS = [PatternSpec.parse(s) for s in ("p2", "p3", "p4", "c3", "c4", "star:1", "star:3", "k2:2", "k2:3", "k2:4")]


def test_known_small_counts():
    k4 = complete_graph(4)
    assert count_p4_lemma(k4) == 12
    k5_minus = build_graph(5, [e for e in complete_graph(5).edges() if e != (3, 4)])
    assert count_p4_lemma(k5_minus) == 42
    assert count_triangles(k4) == 4 and count_c4(k4) == 3
    assert count_c4(cycle_graph(4)) == 1 and count_c4(cycle_graph(5)) == 0


def test_p4_closed_form_matches_oracle_on_all_small_triangulations(all_triangulations):
    graphs = [g for n in range(4, 9) for g in all_triangulations[n]]
    assert len(graphs) == 23
    assert all(count_p4_lemma(g) == count_paths_bruteforce(g, 4) for g in graphs)


def test_p4_closed_form_matches_oracle_on_200_random_graphs():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 10)
        p = rng.uniform(0.1, 0.9)
        g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        assert count_p4_lemma(g) == count_paths_bruteforce(g, 4)


@given(random_graphs(max_n=8))
@settings(max_examples=120, deadline=None)
def test_closed_forms_match_generic_oracle(g):
    for p in PATTERNS:
        assert count_pattern(g, p) == count_pattern_bruteforce(g, p), str(p)


@given(random_graphs())
@settings(max_examples=100, deadline=None)
def test_identities(g):
    assert sum(count_p4_at_vertex(g, v) for v in range(g.n)) == 4 * count_p4_lemma(g)
    assert count_star(g, 2) == count_paths_bruteforce(g, 3)
    assert count_k2k(g, 2) == count_c4(g)
    assert count_star(g, 1) == g.m


def test_triangle_floor(all_triangulations):
    for n, graphs in all_triangulations.items():
        assert all(count_triangles(g) >= 2 * n - 4 for g in graphs)


def test_type_partition(all_triangulations):
    for n in range(4, 10):
        for g in all_triangulations[n]:
            e = embed(g)
            for v in range(n):
                assert classify_p4_at_vertex(e, v).total == count_p4_at_vertex(g, v)


def test_type_counts_at_fn_end_vertex():
    g = make_fn(9)
    e = embed(g)
    tb = classify_p4_at_vertex(e, 2)
    dsum = sum(g.degree(x) for x in g.neighbors(2))
    assert tb.type_i == 2 * dsum - 12 == tb.type_iia + tb.type_iib
    assert tb.total == count_p4_at_vertex(g, 2)


def test_per_vertex_bounds(all_triangulations):
    for n in range(6, 11):
        for g in all_triangulations[n]:
            assert per_vertex_violations(g) is None


def test_second_apex_and_star_edges():
    g = make_fn(9)
    e = embed(g)
    # end vertex 2 sees {0, 1, 3}; vertex 4 is the other common neighbour
    assert g.degree(2) == 3
    assert second_apex(g, 2) == 4
    assert count_star_edges(e, 2) == 1
    k5_minus = build_graph(5, [x for x in complete_graph(5).edges() if x != (3, 4)])
    assert second_apex(k5_minus, 3) == 4
    assert second_apex(complete_graph(4), 0) is None
    with pytest.raises(GraphError):
        count_star_edges(e, 0)
    with pytest.raises(GraphError):
        second_apex(g, 0)


def test_star_edges_never_exceed_three(all_triangulations):
    for n in range(5, 11):
        for g in all_triangulations[n]:
            e = embed(g)
            for v in range(n):
                if g.degree(v) == 3:
                    assert 0 <= count_star_edges(e, v) <= 3


def test_min_degree_four_p4_bound(all_triangulations):
    hits = 0
    for n, graphs in all_triangulations.items():
        for g in graphs:
            if g.min_degree() >= 4:
                hits += 1
                assert count_p4_lemma(g) < 7 * n * n - 36 * n + 50
    assert hits > 0
    assert count_p4_lemma(make_octahedron()) == 84


def test_pattern_spec_parse_and_str():
    for text in ("p2", "p3", "p4", "c3", "c4", "star:5", "k2:7"):
        assert str(PatternSpec.parse(text)) == text
    for bad in ("p5", "star:0", "k2:1", "star:61", "k2:", "c3:2"):
        with pytest.raises(GraphError):
            PatternSpec.parse(bad)
    with pytest.raises(GraphError):
        PatternSpec("C3", 2)


def test_counter_argument_checks():
    g = complete_graph(4)
    with pytest.raises(GraphError):
        count_paths_bruteforce(g, 7)
    with pytest.raises(GraphError):
        count_star(g, 61)
    with pytest.raises(GraphError):
        count_k2k(g, 1)
    with pytest.raises(GraphError):
        count_p4_at_vertex(g, 4)
    with pytest.raises(GraphError):
        classify_p4_at_vertex(embed(cycle_graph(5)), 0)


def test_large_star_counts_are_exact():
    # only the two apexes of F_64 have degree >= 60
    assert count_star(make_fn(64), 60) == 2 * comb(63, 60)
