from __future__ import annotations

import random

import networkx as nx
from hypothesis import given, settings, strategies as st

from planex.canon import canonical_code, canonical_order, canonical_relabel
from planex.families import make_fig1b, make_fn
from planex.graph import build_graph, cycle_graph


def _shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def random_graphs(draw, max_n: int = 10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_code_invariant_under_50_relabellings(all_triangulations):
    rng = random.Random(7)
    for n in (6, 8, 10):
        for g in all_triangulations[n][:15]:
            code = canonical_code(g)
            assert all(canonical_code(_shuffled(g, rng)) == code for _ in range(50))


@given(random_graphs(), st.randoms())
@settings(max_examples=150, deadline=None)
def test_code_invariant_random_graphs(g, rnd):
    assert canonical_code(_shuffled(g, rnd)) == canonical_code(g)


@given(random_graphs(max_n=7), random_graphs(max_n=7))
@settings(max_examples=200, deadline=None)
def test_equal_codes_iff_isomorphic(g, h):
    same = canonical_code(g) == canonical_code(h)
    assert same == nx.is_isomorphic(_nx(g), _nx(h))


def test_distinct_triangulations_have_distinct_codes(all_triangulations):
    for graphs in all_triangulations.values():
        assert len({canonical_code(g) for g in graphs}) == len(graphs)


def test_canonical_relabel_is_fixed_point():
    for g in (make_fn(9), make_fig1b(), cycle_graph(7)):
        c = canonical_relabel(g)
        assert canonical_relabel(c) == c
        assert canonical_code(c) == canonical_code(g)
        assert sorted(canonical_order(g)) == list(range(g.n))
