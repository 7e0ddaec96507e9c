"""Named extremal graphs and the stacked-triangulation recogniser.

Vertex conventions for ``F_n``: the two apexes are 0 and 1 and the path is
``2, 3, ..., n-1``. It is also what the default stacking of
:func:`make_apollonian` produces, with the same labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .embedding import Embedding, faces
from .errors import GraphError
from .formats import from_edgelist
from .graph import Graph, build_graph, complete_graph
from .planarity import is_maximal_planar


def make_fn(n: int) -> Graph:
    """The join of the apex edge {0, 1} with the path 2..n-1."""
    if n < 4:
        raise GraphError("F_n needs n >= 4")
    edges = [(0, 1)]
    edges += [(p, p + 1) for p in range(2, n - 1)]
    edges += [(a, p) for p in range(2, n) for a in (0, 1)]
    return build_graph(n, edges)


def triangle_embedding() -> Embedding:
    return Embedding(build_graph(3, [(0, 1), (1, 2), (0, 2)]), ((1, 2), (2, 0), (0, 1)))


def stack(e: Embedding, face: Sequence[int]) -> Embedding:
    """Insert a new vertex into the triangular face ``a -> b -> c`` of ``e``."""
    a, b, c = face
    if e.succ(b, a) != c or e.succ(c, b) != a or e.succ(a, c) != b:
        raise GraphError(f"{tuple(face)} is not a triangular face of the embedding")
    z = e.graph.n
    g = build_graph(z + 1, e.graph.edges() + [(a, z), (b, z), (c, z)])
    rotation = [list(r) for r in e.rotation] + [[a, c, b]]
    for x, after in ((b, a), (c, b), (a, c)):
        r = rotation[x]
        r.insert(r.index(after) + 1, z)
    return Embedding(g, tuple(tuple(r) for r in rotation))


def stack_into(e: Embedding, triple: set[int] | frozenset[int]) -> Embedding:
    """Stack into the first face (in sorted face order) spanned by ``triple``."""
    for f in faces(e):
        if set(f) == set(triple):
            return stack(e, f)
    raise GraphError(f"no face with vertex set {sorted(triple)}")


def make_apollonian(n: int, stacking: Sequence[int] | None = None) -> Embedding:
    """Stacked triangulation grown from a triangle.

    ``stacking[s]`` indexes ``faces(current)`` at step ``s``. When omitted,
    each new vertex goes into a face spanned by vertices 0, 1 and the most
    recently added vertex, which reproduces :func:`make_fn` exactly.
    """
    if n < 3:
        raise GraphError("Apollonian networks need n >= 3")
    if stacking is not None and len(stacking) != n - 3:
        raise GraphError(f"stacking needs {n - 3} entries, got {len(stacking)}")
    e = triangle_embedding()
    for step in range(n - 3):
        if stacking is None:
            e = stack_into(e, {0, 1, e.graph.n - 1})
            continue
        fs = faces(e)
        idx = stacking[step]
        if not 0 <= idx < len(fs):
            raise GraphError(f"step {step}: face index {idx} out of range 0..{len(fs) - 1}")
        e = stack(e, fs[idx])
    return e


@dataclass(frozen=True)
class ApollonianCertificate:
    """Peeling record: ``order[i] = (vertex, its three neighbours at removal)``."""

    n: int
    base: tuple[int, ...]
    order: tuple[tuple[int, tuple[int, int, int]], ...]

    def reconstruct(self) -> Graph:
        edges = [(a, b) for i, a in enumerate(self.base) for b in self.base[i + 1 :]]
        for v, triple in reversed(self.order):
            edges += [(v, x) for x in triple]
        return build_graph(self.n, edges)


def is_apollonian(g: Graph) -> ApollonianCertificate | None:
    """Peel simplicial degree-3 vertices (lowest id first) down to K4 (or K3)."""
    if g.n < 3 or not is_maximal_planar(g):
        raise GraphError("is_apollonian expects a maximal planar graph")
    adj = list(g.adj)
    alive = set(range(g.n))
    order = []
    while len(alive) > 4:
        for v in sorted(alive):
            if adj[v].bit_count() != 3:
                continue
            x, y, z = (i for i in range(g.n) if adj[v] >> i & 1)
            if adj[x] >> y & 1 and adj[y] >> z & 1 and adj[x] >> z & 1:
                break
        else:
            return None
        order.append((v, (x, y, z)))
        for w in (x, y, z):
            adj[w] &= ~(1 << v)
        adj[v] = 0
        alive.discard(v)
    return ApollonianCertificate(g.n, tuple(sorted(alive)), tuple(order))


def make_fig1b() -> Graph:
    """F_6 with one vertex stacked into the face {apex 0, p2, p3} = {0, 3, 4}."""
    return stack_into(make_apollonian(6), {0, 3, 4}).graph


def make_fig1c() -> Graph:
    """The fig1b graph with a further vertex stacked into {1, 3, 4}."""
    e = stack_into(make_apollonian(6), {0, 3, 4})
    return stack_into(e, {1, 3, 4}).graph


def make_octahedron() -> Graph:
    """K_{2,2,2}; antipodal pairs are {0,1}, {2,3}, {4,5}."""
    return build_graph(
        6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2]
    )


def make_k4() -> Graph:
    return complete_graph(4)


def make_nine_vertex_fixtures() -> list[tuple[str, Graph, int]]:
    """Ten hand-transcribed nine-vertex triangulations with known P4 counts.

    Returns ``(name, graph, expected P4 count)`` in file order.
    Vertices 0, 2, 1 are the triangle around the degree-3 vertex 3 and vertex
    4 is the second common neighbour of that triangle.
    """
    data = resources.files("planex") / "data"
    expected = json.loads((data / "fixtures.json").read_text())
    return [
        (name, from_edgelist((data / f"{name}.txt").read_text()), count)
        for name, count in expected.items()
    ]


FAMILIES = ("fn", "apollonian", "fig1b", "fig1c", "octahedron")
