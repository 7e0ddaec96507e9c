"""Text interchange: the plain edge-list format and graph6."""

from __future__ import annotations

from .errors import GraphError
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def to_edgelist(g: Graph) -> str:
    """Serialise as ``n m`` followed by one sorted ``u v`` line per edge."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    if "\r" in text:
        raise GraphError("edge list must use LF line endings")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphError("empty edge list")
    if any(line == "" for line in lines):
        raise GraphError("blank line in edge list")
    n, m = _two_ints(lines[0], 1)
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} follow")
    edges = []
    for lineno, line in enumerate(body, start=2):
        u, v = _two_ints(line, lineno)
        if not u < v:
            raise GraphError(f"line {lineno}: expected u < v, got {u} {v}")
        if edges and (u, v) <= edges[-1]:
            raise GraphError(f"line {lineno}: edges not strictly sorted")
        edges.append((u, v))
    return build_graph(n, edges)


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphError(f"line {lineno}: expected two decimal integers, got {line!r}")
    return int(parts[0]), int(parts[1])


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~"] + [chr(63 + (n >> s & 63)) for s in (12, 6, 0)]
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d < 64 for d in data):
        raise GraphError(f"not a graph6 string: {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("graph6 vertex counts above 258047 are unsupported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has wrong length for n={n}")
    bits = [d >> (5 - k) & 1 for d in data for k in range(6)]
    if any(bits[nbits:]):
        raise GraphError("graph6 padding bits must be zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)
