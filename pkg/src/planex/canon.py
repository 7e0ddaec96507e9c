"""Canonical labelling by partition refinement and exhaustive individualisation.

The canonical form is the lexicographically least upper-triangular
adjacency bitstring over all orderings reachable by individualising
vertices of the first non-singleton cell and refining to an equitable
partition. Both steps are label-invariant, so isomorphic graphs yield the
same set of leaves and hence the same minimum. Twin vertices in the
target cell are branched on once, which keeps highly symmetric inputs
such as empty or complete graphs linear.
"""

from __future__ import annotations

from .graph import Graph, iter_bits

CanonicalCode = bytes


def canonical_code(g: Graph) -> CanonicalCode:
    """``bytes([n])`` followed by the canonical adjacency bitstring, packed big-endian."""
    n = g.n
    order = canonical_order(g)
    value = _code_int(g, order)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    value <<= nbytes * 8 - nbits
    return bytes([n]) + value.to_bytes(nbytes, "big")


def canonical_order(g: Graph) -> list[int]:
    """A vertex ordering realising the canonical form (``order[i]`` gets label ``i``)."""
    best: list = [None, None]
    _search(g, _refine(g, [(1 << g.n) - 1]), best)
    return best[1]


def canonical_relabel(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def _search(g: Graph, cells: list[int], best: list) -> None:
    for idx, cell in enumerate(cells):
        if cell & (cell - 1):
            break
    else:
        order = [c.bit_length() - 1 for c in cells]
        value = _code_int(g, order)
        if best[0] is None or value < best[0]:
            best[0], best[1] = value, order
        return
    for v in _twin_representatives(g, cell):
        bit = 1 << v
        child = cells[:idx] + [bit, cell ^ bit] + cells[idx + 1 :]
        _search(g, _refine(g, child), best)


def _twin_representatives(g: Graph, cell: int) -> list[int]:
    """One vertex per twin class of ``cell``.

    Swapping two twins is an automorphism that keeps the partition, so their
    subtrees produce the same leaves and one branch suffices.
    """
    adj = g.adj
    reps: list[int] = []
    for v in iter_bits(cell):
        if not any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in reps):
            reps.append(v)
    return reps


def _refine(g: Graph, cells: list[int]) -> list[int]:
    """Split cells by neighbour counts into other cells until stable."""
    adj = g.adj
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            out = []
            for cell in cells:
                if not cell & (cell - 1):
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in iter_bits(cell):
                    key = (adj[v] & splitter).bit_count()
                    groups[key] = groups.get(key, 0) | 1 << v
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(cell)
            cells = out
    return cells


def _code_int(g: Graph, order: list[int]) -> int:
    adj = g.adj
    value = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value
