"""Exact copy counts of small patterns.

All counts are of unlabelled (not necessarily induced) subgraph copies.
Closed forms work from degrees and codegrees; the brute-force routines
enumerate explicitly and serve as independent oracles.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb

from .embedding import Embedding
from .errors import GraphError
from .graph import Graph, build_graph, complete_bipartite, cycle_graph, iter_bits

MAX_K = 60

PATTERN_KINDS = ("P2", "P3", "P4", "C3", "C4", "Star", "Biclique2")


@dataclass(frozen=True, order=True)
class PatternSpec:
    kind: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in PATTERN_KINDS:
            raise GraphError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "Star":
            if self.k is None or not 1 <= self.k <= MAX_K:
                raise GraphError(f"Star(k) needs 1 <= k <= {MAX_K}")
        elif self.kind == "Biclique2":
            if self.k is None or not 2 <= self.k <= MAX_K:
                raise GraphError(f"Biclique2(k) needs 2 <= k <= {MAX_K}")
        elif self.k is not None:
            raise GraphError(f"{self.kind} takes no parameter")

    def __str__(self) -> str:
        if self.kind == "Star":
            return f"star:{self.k}"
        if self.kind == "Biclique2":
            return f"k2:{self.k}"
        return self.kind.lower()

    @classmethod
    def parse(cls, text: str) -> PatternSpec:
        """Parse the CLI spelling: ``p2 p3 p4 c3 c4 star:K k2:K``."""
        s = text.strip().lower()
        simple = {"p2": "P2", "p3": "P3", "p4": "P4", "c3": "C3", "c4": "C4"}
        if s in simple:
            return cls(simple[s])
        match = re.fullmatch(r"(star|k2):(\d+)", s)
        if not match:
            raise GraphError(f"cannot parse pattern {text!r}")
        kind = "Star" if match.group(1) == "star" else "Biclique2"
        return cls(kind, int(match.group(2)))

    def graph(self) -> Graph:
        """The pattern itself as a small graph."""
        if self.kind in ("P2", "P3", "P4"):
            n = int(self.kind[1])
            return build_graph(n, [(i, i + 1) for i in range(n - 1)])
        if self.kind in ("C3", "C4"):
            return cycle_graph(int(self.kind[1]))
        if self.kind == "Star":
            return complete_bipartite(1, self.k)
        return complete_bipartite(2, self.k)


def count_triangles(g: Graph) -> int:
    adj = g.adj
    total = 0
    for u, v in g.edges():
        total += (adj[u] & adj[v] & ~((1 << (v + 1)) - 1)).bit_count()
    return total


def count_p4_lemma(g: Graph) -> int:
    """Paths on four vertices from the edge-degree sum minus three per triangle."""
    d = g.degrees()
    s = sum((d[x] - 1) * (d[y] - 1) for x, y in g.edges())
    return s - 3 * count_triangles(g)


def count_paths_bruteforce(g: Graph, k: int) -> int:
    """Simple paths on ``k`` vertices by DFS, counting each with first end < last end."""
    if not 2 <= k <= 6:
        raise GraphError("count_paths_bruteforce supports 2 <= k <= 6")
    adj = g.adj
    total = 0

    def extend(last: int, used: int, length: int, first: int) -> None:
        nonlocal total
        if length == k:
            if first < last:
                total += 1
            return
        for w in iter_bits(adj[last] & ~used):
            extend(w, used | 1 << w, length + 1, first)

    for s in range(g.n):
        extend(s, 1 << s, 1, s)
    return total


def count_c4(g: Graph) -> int:
    adj = g.adj
    s = 0
    for x in range(g.n):
        for y in range(x + 1, g.n):
            s += comb((adj[x] & adj[y]).bit_count(), 2)
    return s // 2


def count_star(g: Graph, k: int) -> int:
    if not 1 <= k <= MAX_K:
        raise GraphError(f"star size must be in 1..{MAX_K}")
    if k == 1:
        # K_{1,1} is an edge; either endpoint could serve as the centre
        return g.m
    return sum(comb(d, k) for d in g.degrees())


def count_k2k(g: Graph, k: int) -> int:
    if not 2 <= k <= MAX_K:
        raise GraphError(f"K_(2,k) needs 2 <= k <= {MAX_K}")
    adj = g.adj
    s = 0
    for x in range(g.n):
        for y in range(x + 1, g.n):
            s += comb((adj[x] & adj[y]).bit_count(), k)
    return s // 2 if k == 2 else s


def count_pattern(g: Graph, pattern: PatternSpec) -> int:
    kind = pattern.kind
    if kind == "P2":
        return g.m
    if kind == "P3":
        return count_star(g, 2)
    if kind == "P4":
        return count_p4_lemma(g)
    if kind == "C3":
        return count_triangles(g)
    if kind == "C4":
        return count_c4(g)
    if kind == "Star":
        return count_star(g, pattern.k)
    return count_k2k(g, pattern.k)


def count_subgraphs_bruteforce(g: Graph, h: Graph) -> int:
    """Copies of ``h`` in ``g``: injective edge-preserving maps over |Aut(h)|."""
    if h.n > g.n:
        return 0
    order = _connected_order(h)
    back = [[u for u in h.neighbors(v) if order.index(u) < i] for i, v in enumerate(order)]
    image = [-1] * h.n
    full = (1 << g.n) - 1

    def place(i: int, used: int) -> int:
        if i == len(order):
            return 1
        v = order[i]
        cand = full & ~used
        for u in back[i]:
            cand &= g.adj[image[u]]
        total = 0
        for w in iter_bits(cand):
            image[v] = w
            total += place(i + 1, used | 1 << w)
        return total

    maps = place(0, 0)
    return maps // _automorphism_count(h)


def _connected_order(h: Graph) -> list[int]:
    order: list[int] = []
    for s in range(h.n):
        if s in order:
            continue
        order.append(s)
        i = len(order) - 1
        while i < len(order):
            for w in h.neighbors(order[i]):
                if w not in order:
                    order.append(w)
            i += 1
    return order


def _automorphism_count(h: Graph) -> int:
    edges = set(h.edges())
    count = 0
    for perm in itertools.permutations(range(h.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            count += 1
    return count


def count_pattern_bruteforce(g: Graph, pattern: PatternSpec) -> int:
    if pattern.kind in ("P2", "P3", "P4"):
        return count_paths_bruteforce(g, int(pattern.kind[1]))
    return count_subgraphs_bruteforce(g, pattern.graph())


def count_p4_at_vertex(g: Graph, v: int) -> int:
    """Paths on four vertices through ``v``, by direct enumeration.

    Orient each copy so that ``v`` sits first or second; exactly one of the
    two orientations does.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    adj = g.adj
    bit_v = 1 << v
    total = 0
    for a in iter_bits(adj[v]):
        for b in iter_bits(adj[a] & ~bit_v):
            total += (adj[b] & ~bit_v & ~(1 << a)).bit_count()
        # a - v - b - c
        for b in iter_bits(adj[v] & ~(1 << a)):
            total += (adj[b] & ~bit_v & ~(1 << a)).bit_count()
    return total


@dataclass(frozen=True)
class TypeBreakdown:
    type_i: int
    type_iia: int
    type_iib: int
    type_iiia: int
    type_iiib: int

    @property
    def total(self) -> int:
        return self.type_i + self.type_iia + self.type_iib + self.type_iiia + self.type_iiib


def classify_p4_at_vertex(e: Embedding, v: int) -> TypeBreakdown:
    """Split the 3-paths through ``v`` by where their middle edge sits.

    I: middle edge is incident to ``v``. II: path ``v, x, y, .`` with ``x, y``
    neighbours of ``v`` (A if ``xy`` is a link-cycle edge, B if a chord).
    III: path ``v, x, w, z`` with ``w`` outside the closed neighbourhood
    (A if ``z`` is outside ``N(v)``, B otherwise).
    """
    if not e.is_triangulation():
        raise GraphError("classification needs a triangulation embedding")
    g = e.graph
    adj = g.adj
    nv = adj[v]
    bit_v = 1 << v
    rot = e.rotation[v]
    link = {frozenset((rot[i], rot[(i + 1) % len(rot)])) for i in range(len(rot))}
    t1 = t2a = t2b = t3a = t3b = 0
    for a in iter_bits(nv):
        # a - v - b - c: middle edge v-b
        for b in iter_bits(nv & ~(1 << a)):
            t1 += (adj[b] & ~bit_v & ~(1 << a)).bit_count()
        # v - a - b - c
        for b in iter_bits(adj[a] & ~bit_v):
            ends = adj[b] & ~bit_v & ~(1 << a)
            if nv >> b & 1:
                if frozenset((a, b)) in link:
                    t2a += ends.bit_count()
                else:
                    t2b += ends.bit_count()
            else:
                inside = (ends & nv).bit_count()
                t3b += inside
                t3a += ends.bit_count() - inside
    return TypeBreakdown(t1, t2a, t2b, t3a, t3b)


def second_apex(g: Graph, v: int) -> int | None:
    """For a degree-3 vertex, the other common neighbour of its neighbourhood."""
    if g.degree(v) != 3:
        raise GraphError("second_apex needs a degree-3 vertex")
    x, y, z = g.neighbors(v)
    common = g.adj[x] & g.adj[y] & g.adj[z] & ~(1 << v)
    if not common:
        return None
    if common & (common - 1):
        raise RuntimeError(f"neighbourhood of {v} has several outside common neighbours")
    return common.bit_length() - 1


def count_star_edges(e: Embedding, v: int) -> int:
    """Edges from the second apex ``u`` to vertices seeing exactly two of ``N(v)``."""
    g = e.graph
    if g.degree(v) != 3:
        raise GraphError("star edges are defined for degree-3 vertices")
    u = second_apex(g, v)
    if u is None:
        return 0
    nv = g.adj[v]
    closed = nv | 1 << v
    count = sum(
        1 for w in iter_bits(g.adj[u] & ~closed) if (g.adj[w] & nv).bit_count() == 2
    )
    if count > 3:
        raise RuntimeError(f"{count} star edges at vertex {v}; planarity would forbid this")
    return count
