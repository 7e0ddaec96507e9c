"""Isomorph-free generation of maximal planar graphs.

The main generator closes a seed triangulation under diagonal flips,
deduplicating by canonical code; the flip graph of sphere triangulations
on a fixed vertex count is connected, so the closure is complete. The
brute-force generator enumerates labelled edge sets independently and is
used to cross-check small orders.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .canon import CanonicalCode, canonical_code
from .embedding import Embedding
from .errors import GraphError
from .families import make_apollonian
from .graph import Graph, build_graph
from .planarity import is_planar

BRUTE_FORCE_MAX_N = 8


@dataclass(frozen=True)
class Flip:
    """Replace edge ``{u, v}`` by ``{w, x}``; ``u->v->w`` and ``v->u->x`` are faces."""

    u: int
    v: int
    w: int
    x: int


@dataclass
class TriangulationSet:
    n: int
    representatives: dict[CanonicalCode, tuple[Graph, Embedding | None]] = field(default_factory=dict)

    @property
    def codes(self) -> frozenset[CanonicalCode]:
        return frozenset(self.representatives)

    def __len__(self) -> int:
        return len(self.representatives)

    def sorted_codes(self) -> list[CanonicalCode]:
        return sorted(self.representatives)

    def graphs(self) -> list[Graph]:
        """One representative graph per class, sorted by canonical code."""
        return [self.representatives[c][0] for c in self.sorted_codes()]

    def items(self) -> list[tuple[CanonicalCode, Graph]]:
        return [(c, self.representatives[c][0]) for c in self.sorted_codes()]


def seed_triangulation(n: int) -> Embedding:
    """Embedding of F_n built by face stacking (no planarity test involved)."""
    if n < 4:
        raise GraphError("triangulation enumeration starts at n = 4")
    return make_apollonian(n)


def _require_triangulation(e: Embedding) -> None:
    if not e.is_triangulation():
        raise GraphError("expected a triangulation embedding")


def _opposite(e: Embedding, u: int, v: int) -> tuple[int, int]:
    return e.succ(v, u), e.succ(u, v)


def legal_flips(e: Embedding) -> list[Flip]:
    _require_triangulation(e)
    return _legal_flips(e)


def _legal_flips(e: Embedding) -> list[Flip]:
    out = []
    g = e.graph
    for u, v in g.edges():
        w, x = _opposite(e, u, v)
        if w != x and not g.has_edge(w, x):
            out.append(Flip(u, v, w, x))
    return out


def apply_flip(e: Embedding, f: Flip) -> Embedding:
    g = e.graph
    if not g.has_edge(f.u, f.v) or _opposite(e, f.u, f.v) != (f.w, f.x):
        raise GraphError(f"{f} does not match the faces of the embedding")
    if f.w == f.x or g.has_edge(f.w, f.x):
        raise GraphError(f"{f} is illegal: {f.w} and {f.x} are already adjacent")
    adj = list(g.adj)
    adj[f.u] &= ~(1 << f.v)
    adj[f.v] &= ~(1 << f.u)
    adj[f.w] |= 1 << f.x
    adj[f.x] |= 1 << f.w
    rotation = [list(r) for r in e.rotation]
    rotation[f.u].remove(f.v)
    rotation[f.v].remove(f.u)
    rw = rotation[f.w]
    rw.insert(rw.index(f.v) + 1, f.x)
    rx = rotation[f.x]
    rx.insert(rx.index(f.u) + 1, f.w)
    return Embedding(Graph(g.n, tuple(adj)), tuple(tuple(r) for r in rotation))


def enumerate_triangulations(n: int, seed: Embedding | None = None) -> TriangulationSet:
    """Breadth-first flip closure of ``seed`` (default: F_n)."""
    if n < 4:
        raise GraphError("triangulation enumeration starts at n = 4")
    start = seed if seed is not None else seed_triangulation(n)
    if start.graph.n != n:
        raise GraphError("seed has the wrong vertex count")
    _require_triangulation(start)
    result = TriangulationSet(n)
    result.representatives[canonical_code(start.graph)] = (start.graph, start)
    queue = deque([start])
    while queue:
        e = queue.popleft()
        for f in _legal_flips(e):
            nxt = apply_flip(e, f)
            code = canonical_code(nxt.graph)
            if code not in result.representatives:
                result.representatives[code] = (nxt.graph, nxt)
                queue.append(nxt)
    return result


def brute_force_triangulations(n: int) -> TriangulationSet:
    """All n-vertex maximal planar graphs from labelled edge sets.

    Walks the vertex pairs in row order (all pairs of vertex 0, then of 1,
    ...) choosing each as edge or non-edge. Only labellings whose degrees
    are non-increasing in vertex id are kept; every isomorphism class has
    one. Subtrees die when the edge budget ``3n - 6`` cannot be met, when a
    finished vertex has degree below 3, or when the edges fixed so far are
    already non-planar.
    """
    if not 4 <= n <= BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force supports 4 <= n <= {BRUTE_FORCE_MAX_N}")
    target = 3 * n - 6
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    deg = [0] * n
    chosen: list[tuple[int, int]] = []
    result = TriangulationSet(n)

    def row_done(i: int) -> bool:
        if deg[i] < 3 or (i > 0 and deg[i] > deg[i - 1]):
            return False
        rest = range(i + 1, n)
        if any(deg[j] > deg[i] or deg[j] + len(rest) - 1 < 3 for j in rest):
            return False
        # remaining edges live among later vertices, each capped at deg[i]
        missing = target - len(chosen)
        if missing < 0 or sum(deg[i] - deg[j] for j in rest) < 2 * missing:
            return False
        return i == n - 2 or is_planar(build_graph(n, chosen))

    def walk(idx: int) -> None:
        if len(chosen) > target or len(chosen) + len(pairs) - idx < target:
            return
        if idx == len(pairs):
            g = build_graph(n, chosen)
            if is_planar(g):
                code = canonical_code(g)
                if code not in result.representatives:
                    result.representatives[code] = (g, None)
            return
        i, j = pairs[idx]
        last_in_row = j == n - 1
        for take in (True, False):
            if take:
                if i > 0 and max(deg[i], deg[j]) + 1 > deg[i - 1]:
                    continue
                chosen.append((i, j))
                deg[i] += 1
                deg[j] += 1
            elif deg[i] + (n - 1 - j) < 3:
                continue
            if not last_in_row or row_done(i):
                walk(idx + 1)
            if take:
                chosen.pop()
                deg[i] -= 1
                deg[j] -= 1

    walk(0)
    return result
