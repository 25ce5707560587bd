"""Recognizers for the graph classes the verification harness needs:
threshold graphs (with their creation sequence), split partitions,
complete multipartite part structure, and empty-plus-one-star unions.
"""

from __future__ import annotations

from .graphs import Graph, bits, complement, connected_components


def threshold_sequence(g: Graph) -> str | None:
    """Creation sequence ('i'/'u' per vertex, position 0 is the one-vertex
    base) recovered by peeling isolated/universal vertices, or ``None`` when
    the graph is not threshold. The number of 'u' entries after position 0
    is an isomorphism invariant: at every peel step at most one of the two
    vertex kinds can exist.
    """
    if g.n == 0:
        return None
    remaining = g.vertex_mask
    reverse: list[str] = []
    while remaining:
        k = remaining.bit_count()
        if k == 1:
            reverse.append("i")
            break
        pick = -1
        flag = ""
        for v in bits(remaining):
            d = (g.adj[v] & remaining).bit_count()
            if d == 0:
                pick, flag = v, "i"
                break
            if d == k - 1:
                pick, flag = v, "u"
                break
        if pick < 0:
            return None
        reverse.append(flag)
        remaining &= ~(1 << pick)
    return "".join(reversed(reverse))


def is_threshold(g: Graph) -> bool:
    return threshold_sequence(g) is not None


def universal_additions(seq: str) -> int:
    """Count of universal-vertex additions; position 0 is the base vertex."""
    return seq[1:].count("u")


def split_partition(g: Graph) -> tuple[int, int] | None:
    """(clique mask, independent mask) via the degree-sequence test, or
    ``None`` when no such partition exists. Ties in the degree order do not
    matter: the characterizing equality forces every top block to be a
    clique and the rest independent.
    """
    if g.n == 0:
        return (0, 0)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    m = 0
    for i in range(1, g.n + 1):
        if d[i - 1] >= i - 1:
            m = i
    lhs = sum(d[:m])
    rhs = m * (m - 1) + sum(d[m:])
    if lhs != rhs:
        return None
    clique = 0
    for v in order[:m]:
        clique |= 1 << v
    return clique, g.vertex_mask & ~clique


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


def multipartite_parts(g: Graph) -> list[int] | None:
    """Part masks when the graph is complete multipartite (the complement is
    a disjoint union of cliques); a single part means the graph is edgeless.
    """
    co = complement(g)
    parts: list[int] = []
    for comp in connected_components(co):
        cmask = 0
        for v in comp:
            cmask |= 1 << v
        for v in comp:
            if (co.adj[v] & cmask).bit_count() != len(comp) - 1:
                return None
        parts.append(cmask)
    return parts


def is_complete_multipartite(g: Graph) -> bool:
    return multipartite_parts(g) is not None


def star_forest_form(g: Graph) -> tuple[int, int] | None:
    """(isolated count, leaf count m) when the graph is a disjoint union of
    isolated vertices and at most one star; ``None`` otherwise. A lone
    isolated vertex doubles as the m=0 star, so any nonempty edgeless graph
    qualifies.
    """
    if g.n == 0:
        return None
    comps = connected_components(g)
    big = [c for c in comps if len(c) > 1]
    singles = sum(1 for c in comps if len(c) == 1)
    if not big:
        return (g.n - 1, 0)
    if len(big) > 1:
        return None
    c = big[0]
    size = len(c)
    degs = sorted(g.degree(v) for v in c)
    if degs[-1] == size - 1 and all(x == 1 for x in degs[:-1]):
        return (singles, size - 1)
    return None
