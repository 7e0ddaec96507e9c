"""Planarity testing and embedding by path addition.

Each biconnected block is embedded with the Demoucron-Malgrange-Pertuiset
procedure: start from a cycle, then repeatedly route a path of some
bridge (fragment) through a face containing all of its attachment
vertices. A fragment with no such face certifies non-planarity. Block
rotations are concatenated at cut vertices.
"""

from __future__ import annotations

from collections import deque

from .embedding import Embedding
from .errors import GraphError
from .graph import Graph


def is_planar(g: Graph) -> bool:
    return _rotation(g) is not None


def is_maximal_planar(g: Graph) -> bool:
    if g.n < 3:
        raise GraphError("maximal planarity is defined for n >= 3")
    return g.m == 3 * g.n - 6 and is_planar(g)


def embed(g: Graph) -> Embedding:
    """Return some planar rotation system of ``g``; rejects non-planar input."""
    rot = _rotation(g)
    if rot is None:
        raise GraphError("graph is not planar")
    return Embedding(g, tuple(tuple(r) for r in rot))


def _rotation(g: Graph) -> list[list[int]] | None:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return None
    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for block in _blocks(g):
        local = _embed_block(block)
        if local is None:
            return None
        for v, order in local.items():
            rotation[v].extend(order)
    return rotation


def _blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (Hopcroft-Tarjan)."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    blocks = []
    stack: list[tuple[int, int]] = []
    clock = 0
    for root in range(n):
        if disc[root] != -1 or not nbrs[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # iterative DFS: (vertex, parent, next neighbour index)
        work = [(root, -1, 0)]
        while work:
            v, parent, i = work.pop()
            if i < len(nbrs[v]):
                work.append((v, parent, i + 1))
                w = nbrs[v][i]
                if disc[w] == -1:
                    stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    work.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        edge = stack.pop()
                        block.append(edge)
                        if edge == (parent, v):
                            break
                    blocks.append(block)
    return blocks


def _embed_block(edges: list[tuple[int, int]]) -> dict[int, list[int]] | None:
    if len(edges) == 1:
        a, b = edges[0]
        return {a: [b], b: [a]}
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    vertices = set(adj)
    if len(edges) > 3 * len(vertices) - 6:
        return None

    a, b = min(edges)
    cycle = _path_avoiding_edge(adj, a, b)
    in_h = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    face_list = [cycle, cycle[::-1]]

    while len(h_edges) < len(edges):
        fragments = _fragments(adj, in_h, h_edges)
        chosen = None
        for attach, path_fn in fragments:
            admissible = [f for f in face_list if attach <= set(f)]
            if not admissible:
                return None
            if chosen is None or len(admissible) == 1:
                chosen = (admissible[0], path_fn)
                if len(admissible) == 1:
                    break
        face, path_fn = chosen
        path = path_fn()
        face_list.remove(face)
        face_list.extend(_split_face(face, path))
        in_h.update(path)
        h_edges.update(frozenset(p) for p in zip(path, path[1:]))

    succ: dict[int, dict[int, int]] = {v: {} for v in vertices}
    for f in face_list:
        k = len(f)
        for i in range(k):
            succ[f[i]][f[i - 1]] = f[(i + 1) % k]
    rotation = {}
    for v, nxt in succ.items():
        start = min(nxt)
        order = [start]
        w = nxt[start]
        while w != start:
            order.append(w)
            w = nxt[w]
        rotation[v] = order
    return rotation


def _path_avoiding_edge(adj: dict[int, set[int]], a: int, b: int) -> list[int]:
    """Shortest a..b path that does not use the edge {a, b}."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in prev or (x == a and y == b):
                continue
            prev[y] = x
            if y == b:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(y)
    raise GraphError("block is not biconnected")


def _fragments(adj, in_h, h_edges):
    """Yield ``(attachment set, lazy path builder)`` for every bridge of H."""
    out = []
    for x in sorted(in_h):
        for y in sorted(adj[x]):
            if y in in_h and x < y and frozenset((x, y)) not in h_edges:
                out.append(({x, y}, lambda x=x, y=y: [x, y]))
    seen: set[int] = set()
    for s in sorted(adj):
        if s in in_h or s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in in_h and y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        attach = {y for x in comp for y in adj[x] if y in in_h}
        out.append((attach, lambda comp=comp, attach=attach: _fragment_path(adj, comp, attach)))
    return out


def _fragment_path(adj, comp: set[int], attach: set[int]) -> list[int]:
    ends = sorted(attach)
    a = ends[0]
    prev: dict[int, int | None] = {}
    queue = deque()
    for c in sorted(adj[a] & comp):
        prev[c] = None
        queue.append(c)
    while queue:
        x = queue.popleft()
        targets = sorted(t for t in adj[x] & attach if t != a)
        if targets:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return [a] + path[::-1] + [targets[0]]
        for y in sorted(adj[x] & comp):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    raise GraphError("fragment has a single attachment; block is not biconnected")


def _split_face(face: list[int], path: list[int]) -> tuple[list[int], list[int]]:
    a, b = path[0], path[-1]
    k = len(face)
    i, j = face.index(a), face.index(b)
    a_to_b = [face[(i + t) % k] for t in range((j - i) % k + 1)]
    b_to_a = [face[(j + t) % k] for t in range((i - j) % k + 1)]
    inner = path[1:-1]
    return a_to_b + inner[::-1], b_to_a + inner
