"""Rotation systems: combinatorial embeddings of graphs on the sphere.

A rotation gives, for every vertex, the cyclic order of its neighbours.
Faces are traced with the rule: after the directed edge ``u -> v`` comes
``v -> succ_v(u)``, where ``succ_v`` is the cyclic successor in the rotation
at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    _succ: tuple[dict[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise GraphError("rotation system must list every vertex")
        succ = []
        for v, order in enumerate(self.rotation):
            if sorted(order) != g.neighbors(v):
                raise GraphError(f"rotation at {v} is not a permutation of its neighbours")
            k = len(order)
            succ.append({order[i]: order[(i + 1) % k] for i in range(k)})
        object.__setattr__(self, "_succ", tuple(succ))

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` that follows ``u`` in the rotation at ``v``."""
        return self._succ[v][u]

    def faces(self) -> list[tuple[int, ...]]:
        return faces(self)

    def is_spherical(self) -> bool:
        """Euler's formula, applied per connected component."""
        g = self.graph
        isolated = sum(1 for v in range(g.n) if g.degree(v) == 0)
        return g.n - g.m + len(self.faces()) + isolated == 2 * _components(g)

    def is_triangulation(self) -> bool:
        g = self.graph
        if g.n < 3 or g.m != 3 * g.n - 6:
            return False
        fs = self.faces()
        return len(fs) == 2 * g.n - 4 and all(len(f) == 3 for f in fs)


def _components(g: Graph) -> int:
    seen = 0
    count = 0
    for s in range(g.n):
        if seen >> s & 1:
            continue
        count += 1
        frontier = 1 << s
        seen |= frontier
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= g.adj[low.bit_length() - 1]
                v ^= low
            frontier = nxt & ~seen
            seen |= frontier
    return count


def make_embedding(g: Graph, rotation: Sequence[Sequence[int]]) -> Embedding:
    return Embedding(g, tuple(tuple(r) for r in rotation))


def faces(e: Embedding) -> list[tuple[int, ...]]:
    """Trace all faces; each face is the cyclic vertex sequence of its walk.

    Faces are normalised to start at the smallest directed edge they contain
    and returned sorted, so the output is deterministic.
    """
    g = e.graph
    visited: set[tuple[int, int]] = set()
    out = []
    for u in range(g.n):
        for v in e.rotation[u]:
            if (u, v) in visited:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                walk.append(a)
                a, b = b, e.succ(b, a)
            if (a, b) != (u, v):
                raise GraphError("face traversal did not close; rotation is inconsistent")
            out.append(_normalise(walk))
    out.sort()
    return out


def _normalise(walk: list[int]) -> tuple[int, ...]:
    k = len(walk)
    darts = [(walk[i], walk[(i + 1) % k]) for i in range(k)]
    start = min(range(k), key=lambda i: darts[i])
    return tuple(walk[start:] + walk[:start])


def link_cycle(e: Embedding, v: int) -> tuple[int, ...]:
    """Neighbours of ``v`` in rotation order; in a triangulation they form a cycle."""
    if e.graph.n < 4 or not e.is_triangulation():
        raise GraphError("link_cycle needs a triangulation embedding with n >= 4")
    return e.rotation[v]
