"""Immutable simple graphs over vertex indices 0..n-1 with bit-mask adjacency.

A vertex set is a plain Python int used as a bit mask, so set algebra is
bitwise arithmetic and equality is int equality. Graphs created through
:func:`make_graph` are capped at ``WORD_LIMIT`` vertices (one machine word
per set); derived structures such as reconfiguration graphs and predicted
products may be larger and are capped by ``LARGE_LIMIT`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import GraphConstructionError, SizeLimit

WORD_LIMIT = 64
LARGE_LIMIT = 4096


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour mask of ``v``.

    Labels are display strings carried for provenance (product pairs,
    part indices). They never participate in equality or hashing.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.edge_count()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        """Closed neighbourhood mask N[v]."""
        return self.adj[v] | (1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def validate(self) -> None:
        """Check the representation invariants; used by tests."""
        full = self.vertex_mask
        for v, a in enumerate(self.adj):
            assert a & ~full == 0, f"mask of {v} escapes 0..{self.n - 1}"
            assert not a >> v & 1, f"loop at {v}"
            for u in bits(a):
                assert self.adj[u] >> v & 1, f"asymmetric edge {v},{u}"
        if self.labels is not None:
            assert len(self.labels) == self.n


def make_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Iterable[str] | None = None,
) -> Graph:
    """Build a graph from an edge list; duplicate edges are idempotent.

    Rejects loops, endpoints >= n, and n > ``WORD_LIMIT``.
    """
    if n < 0:
        raise GraphConstructionError("vertex count must be nonnegative")
    if n > WORD_LIMIT:
        raise SizeLimit(f"vertex count {n} exceeds the {WORD_LIMIT}-vertex cap")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphConstructionError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u},{v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    lab = tuple(labels) if labels is not None else None
    if lab is not None and len(lab) != n:
        raise GraphConstructionError("label count must equal vertex count")
    return Graph(n, tuple(adj), lab)


def _graph(n: int, adj: list[int], labels: tuple[str, ...] | None = None) -> Graph:
    """Internal constructor for derived structures (no word-size cap)."""
    if n > LARGE_LIMIT:
        raise SizeLimit(f"derived graph on {n} vertices exceeds the {LARGE_LIMIT} cap")
    return Graph(n, tuple(adj), labels)


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply ``perm`` (old index -> new index) to the graph."""
    p = list(perm)
    adj = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in bits(g.adj[v]):
            m |= 1 << p[u]
        adj[p[v]] = m
    labels = None
    if g.labels is not None:
        out = [""] * g.n
        for v in range(g.n):
            out[p[v]] = g.labels[v]
        labels = tuple(out)
    return Graph(g.n, tuple(adj), labels)


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: the set S together with every neighbour of S."""
    m = s
    for v in bits(s):
        m |= g.adj[v]
    return m


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the mask ``keep`` plus the order-preserving index map."""
    order = list(bits(keep))
    index = {old: new for new, old in enumerate(order)}
    adj = []
    for old in order:
        m = 0
        for u in bits(g.adj[old] & keep):
            m |= 1 << index[u]
        adj.append(m)
    labels = tuple(g.labels[v] for v in order) if g.labels else None
    return Graph(len(order), tuple(adj), labels), index


def delete_closed_neighborhood(g: Graph, s: int) -> tuple[Graph, dict[int, int]]:
    """G - N[S] as an induced subgraph, with the old->new index map."""
    return induced_subgraph(g, g.vertex_mask & ~closed_neighborhood(g, s))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    adj = list(g.adj) + [a << g.n for a in h.adj]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(
            h.label(v) for v in range(h.n)
        )
    return _graph(n, adj, labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    base = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [
        (a | hmask) if v < g.n else (a | gmask)
        for v, a in enumerate(base.adj)
    ]
    return _graph(base.n, adj, base.labels)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Product on pairs (u,v), indexed u*n(H)+v; labels record the pair."""
    n = g.n * h.n
    if n > LARGE_LIMIT:
        raise SizeLimit(f"product on {n} vertices exceeds the {LARGE_LIMIT} cap")
    nh = h.n
    adj = [0] * n
    for u in range(g.n):
        for v in range(h.n):
            i = u * nh + v
            m = 0
            for w in bits(h.adj[v]):
                m |= 1 << (u * nh + w)
            for w in bits(g.adj[u]):
                m |= 1 << (w * nh + v)
            adj[i] = m
    labels = tuple(
        f"({g.label(u)},{h.label(v)})" for u in range(g.n) for v in range(h.n)
    )
    return Graph(n, tuple(adj), labels)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    adj = [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)]
    return Graph(g.n, tuple(adj), g.labels)


def universal_vertices(g: Graph) -> int:
    """Mask of vertices adjacent to every other vertex."""
    m = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == g.n - 1:
            m |= 1 << v
    return m


def connected_components(g: Graph) -> list[list[int]]:
    """Component partition, sorted by least member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp |= grown
        seen |= comp
        out.append(list(bits(comp)))
    return out


def _bfs_dist(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    frontier = 1 << root
    seen = frontier
    d = 0
    while frontier:
        grown = 0
        for u in bits(frontier):
            grown |= g.adj[u]
        frontier = grown & ~seen
        seen |= frontier
        d += 1
        for u in bits(frontier):
            dist[u] = d
    return dist


def diameter(g: Graph) -> int | None:
    """Longest shortest path; ``None`` when the graph is disconnected."""
    if g.n == 0:
        return None
    best = 0
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        if -1 in dist:
            return None
        best = max(best, max(dist))
    return best


def girth(g: Graph) -> int | None:
    """Length of the shortest cycle; ``None`` for forests."""
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if best is not None and 2 * dist[x] >= best:
                break
            for y in bits(g.adj[x]):
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    cycle = dist[x] + dist[y] + 1
                    if best is None or cycle < best:
                        best = cycle
        if best == 3:
            return 3
    return best


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return girth(g) is None


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.edge_count() == g.n - 1


@dataclass(frozen=True)
class GraphMetrics:
    components: list[list[int]]
    diameter: int | None
    girth: int | None
    min_degree: int | None
    max_degree: int | None


def metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees()
    return GraphMetrics(
        components=connected_components(g),
        diameter=diameter(g),
        girth=girth(g),
        min_degree=min(degs) if degs else None,
        max_degree=max(degs) if degs else None,
    )
