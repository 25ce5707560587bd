"""The expansion/contraction adjacency test and reconfiguration-graph builders.

Two minimal dominating sets are adjacent when one difference is a single
vertex v and the other difference lies inside N(v); when both differences
are singletons this degenerates to a token slide. The gamma-graph builder
keeps only minimum-size sets and uses the token-sliding rule directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .domination import (
    ENUMERATION_LIMIT,
    MdsCollection,
    enumerate_mds,
    is_minimal_dominating,
    mds_limit,
    minimum_mds,
)
from .errors import NotMinimal, SizeLimit
from .formats import graph6_encode, to_dot
from .graphs import Graph, bits, connected_components, diameter

KIND_FULL = "full"
KIND_GAMMA = "gamma"


def _adjacent(adj: tuple[int, ...], m1: int, m2: int) -> bool:
    d12 = m1 & ~m2
    d21 = m2 & ~m1
    if d21 and not (d21 & (d21 - 1)):
        v = d21.bit_length() - 1
        if d12 & ~adj[v] == 0:
            return True
    if d12 and not (d12 & (d12 - 1)):
        v = d12.bit_length() - 1
        if d21 & ~adj[v] == 0:
            return True
    return False


def mds_adjacent(g: Graph, m1: int, m2: int) -> bool:
    """Adjacency under the expansion/contraction rule; checks both inputs."""
    for m in (m1, m2):
        if not is_minimal_dominating(g, m):
            raise NotMinimal(f"set {sorted(bits(m))} is not a minimal dominating set")
    return _adjacent(g.adj, m1, m2)


def gamma_adjacent(g: Graph, m1: int, m2: int) -> bool:
    """Token slide: the sets differ by one vertex each way, and the two
    differing vertices are adjacent in the host graph."""
    d12 = m1 & ~m2
    d21 = m2 & ~m1
    if not d12 or d12 & (d12 - 1) or not d21 or d21 & (d21 - 1):
        return False
    u = d12.bit_length() - 1
    v = d21.bit_length() - 1
    return g.has_edge(u, v)


@dataclass(frozen=True)
class ReconfigGraph:
    """Graph on minimal (or minimum) dominating sets of ``base``.

    Vertex i of ``edges`` is ``sets[i]``; enumeration order fixes the
    indexing so exports are reproducible.
    """

    base: Graph
    sets: MdsCollection
    edges: Graph
    kind: str

    def set_labels(self) -> list[str]:
        return ["{" + ",".join(str(v) for v in bits(m)) + "}" for m in self.sets]

    def to_dot(self, name: str = "R") -> str:
        return to_dot(self.edges, name=name, node_labels=self.set_labels())

    def to_graph6(self) -> str:
        return graph6_encode(self.edges)

    def to_json_dict(self) -> dict:
        return {
            "base": graph6_encode(self.base),
            "kind": self.kind,
            "sets": self.sets.to_lists(),
            "edges": [[u, v] for u, v in self.edges.edges()],
            "components": connected_components(self.edges),
            "diameter": diameter(self.edges),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _edge_graph(sets: tuple[int, ...], adjacent) -> Graph:
    k = len(sets)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if adjacent(sets[i], sets[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(k, tuple(adj))


def build_reconfig_graph(
    g: Graph,
    max_n: int = ENUMERATION_LIMIT,
    limit: int | None = None,
) -> ReconfigGraph:
    """R(G): every minimal dominating set, all-pairs expansion/contraction."""
    sets = enumerate_mds(g, max_n=max_n)
    cap = limit if limit is not None else mds_limit()
    if len(sets) > cap:
        raise SizeLimit(f"{len(sets)} minimal dominating sets exceed the cap {cap}")
    adj = g.adj
    edges = _edge_graph(sets.sets, lambda a, b: _adjacent(adj, a, b))
    return ReconfigGraph(base=g, sets=sets, edges=edges, kind=KIND_FULL)


def build_gamma_graph(
    g: Graph,
    max_n: int = ENUMERATION_LIMIT,
    limit: int | None = None,
) -> ReconfigGraph:
    """Token-sliding graph on the minimum dominating sets."""
    sets = minimum_mds(g, max_n=max_n)
    cap = limit if limit is not None else mds_limit()
    if len(sets) > cap:
        raise SizeLimit(f"{len(sets)} minimum dominating sets exceed the cap {cap}")
    edges = _edge_graph(sets.sets, lambda a, b: gamma_adjacent(g, a, b))
    return ReconfigGraph(base=g, sets=sets, edges=edges, kind=KIND_GAMMA)
