from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from planex.errors import GraphError
from planex.families import make_fn
from planex.formats import from_edgelist, from_graph6, to_edgelist, to_graph6
from planex.graph import build_graph, complete_graph


@st.composite
def graphs(draw, max_n: int = 64):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@given(graphs())
@settings(max_examples=60)
def test_graph6_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=20))
def test_edgelist_roundtrip(g):
    assert from_edgelist(to_edgelist(g)) == g


@given(graphs())
@settings(max_examples=60)
def test_graph6_matches_networkx_bytes(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_graph6_known_vectors():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])) == "DhC"
    assert from_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_long_header_above_62_vertices():
    g = build_graph(63, [(0, 62)])
    text = to_graph6(g)
    assert text.startswith("~??~")
    assert from_graph6(text) == g


def test_graph6_rejects_garbage_and_nonzero_padding():
    with pytest.raises(GraphError):
        from_graph6("")
    with pytest.raises(GraphError):
        from_graph6("C\x7f")
    with pytest.raises(GraphError):
        from_graph6("B@")  # pad bits set for n = 2


def test_edgelist_text_is_exact():
    assert to_edgelist(make_fn(4)) == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


@pytest.mark.parametrize(
    "text",
    [
        "3 1\r\n0 1\r\n",
        "3 2\n0 1\n",
        "3 1\n1 0\n",
        "3 2\n0 2\n0 1\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0  1\n",
        "3 1\n0 1\n\n",
        "3 1\n0 3\n",
    ],
)
def test_edgelist_rejects_malformed(text):
    with pytest.raises(GraphError):
        from_edgelist(text)
