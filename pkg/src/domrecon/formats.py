"""graph6, edge-list, and DOT serialization.

graph6 follows the standard byte layout: an order field (``chr(n+63)`` for
n <= 62, ``~`` plus three bytes for larger orders), then the upper-triangle
adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
six-bit groups offset by 63. The ``>>graph6<<`` header is optional on input.
"""

from __future__ import annotations

from typing import Iterable

from .errors import FormatError, SizeLimit
from .graphs import LARGE_LIMIT, Graph

HEADER = ">>graph6<<"


def graph6_encode(g: Graph, header: bool = False) -> str:
    chunks = []
    if g.n <= 62:
        chunks.append(chr(g.n + 63))
    elif g.n <= 258047:
        chunks.append("~")
        chunks.append(chr(((g.n >> 12) & 63) + 63))
        chunks.append(chr(((g.n >> 6) & 63) + 63))
        chunks.append(chr((g.n & 63) + 63))
    else:  # pragma: no cover - beyond every cap in this package
        raise SizeLimit("graph6 encoding beyond 258047 vertices is unsupported")
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chunks.append(chr(acc + 63))
    body = "".join(chunks)
    return HEADER + body if header else body


def graph6_decode(record: str) -> Graph:
    s = record.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise FormatError("empty graph6 record")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise FormatError(f"illegal graph6 character in {record!r}")
    if data[0] != 63:
        n = data[0]
        pos = 1
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 order field")
        if data[1] == 63:
            raise SizeLimit("graph6 order beyond 258047 is unsupported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n > LARGE_LIMIT:
        raise SizeLimit(f"graph6 record on {n} vertices exceeds the {LARGE_LIMIT} cap")
    need = n * (n - 1) // 2
    if len(data) - pos != (need + 5) // 6:
        raise FormatError(f"graph6 record has wrong length for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def edge_list_encode(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str) -> Graph:
    from .graphs import make_graph

    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError(f"edge-list header must be a vertex count: {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"edge line must be 'u v': {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"non-integer endpoint in {ln!r}") from exc
    return make_graph(n, edges)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G", node_labels: Iterable[str] | None = None) -> str:
    """DOT text with deterministic vertex and edge order."""
    labels = list(node_labels) if node_labels is not None else (
        list(g.labels) if g.labels else None
    )
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            out.append(f"  {v} [label={_quote(labels[v])}];")
        else:
            out.append(f"  {v};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def read_graph_file(text: str) -> Graph:
    """Sniff a single-graph file: edge-list if the first line is a bare count."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty graph file")
    first = lines[0]
    if first.lstrip("-").isdigit() and all(
        len(ln.split()) == 2 and all(p.lstrip("-").isdigit() for p in ln.split())
        for ln in lines[1:]
    ):
        return edge_list_decode(text)
    return graph6_decode(first)


__all__ = [
    "graph6_encode",
    "graph6_decode",
    "edge_list_encode",
    "edge_list_decode",
    "to_dot",
    "read_graph_file",
    "HEADER",
]
