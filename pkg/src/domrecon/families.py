"""Named graph families, predicted reconfiguration constructions, and
exhaustive/random small-graph sources.

Family specs parse from a small CLI language, e.g. ``kmn:2,3``,
``afr:1,1,2``, ``rook:3``, ``threshold:iuu``, ``tree:12:seed=7``,
``mjoin:complete:3|complete:3|0,1,2``. Generation is deterministic for a
fixed spec (and seed, for the random families).
"""

from __future__ import annotations

import itertools
import heapq
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .canonical import canonical_form
from .errors import FormatError, GraphConstructionError, SizeLimit, UniversalVertexPresent
from .graphs import (
    LARGE_LIMIT,
    WORD_LIMIT,
    Graph,
    cartesian_product,
    disjoint_union,
    make_graph,
    relabel,
    universal_vertices,
)
from .reconfig import ReconfigGraph

MAX_ENUMERATION_ORDER = 7


# ---------------------------------------------------------------------------
# family specs


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Empty:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Star:
    leaves: int


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Rook:
    n: int


@dataclass(frozen=True)
class FoldedRook:
    n: int


@dataclass(frozen=True)
class Afr:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Threshold:
    seq: str  # 'i'/'u' per vertex; position 0 is the base


@dataclass(frozen=True)
class MatchingJoin:
    left: "FamilySpec"
    right: "FamilySpec"
    matching: tuple[int, ...] | None = None  # None means the identity


@dataclass(frozen=True)
class RandomTree:
    n: int
    seed: int


@dataclass(frozen=True)
class RandomSplit:
    n: int
    clique_size: int
    edge_prob: float
    seed: int


FamilySpec = Union[
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    CompleteMultipartite,
    Rook,
    FoldedRook,
    Afr,
    Threshold,
    MatchingJoin,
    RandomTree,
    RandomSplit,
]


# ---------------------------------------------------------------------------
# direct constructions


def complete(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    return make_graph(n, [])


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((n - 1, 0))
    return make_graph(n, edges)


def star(leaves: int) -> Graph:
    """K(1,leaves) with the centre at index 0."""
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(parts: tuple[int, ...]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphConstructionError("multipartite parts must be positive and nonempty")
    n = sum(parts)
    part_of = []
    labels = []
    for k, size in enumerate(parts):
        for j in range(size):
            part_of.append(k)
            labels.append(f"p{k + 1}.{j + 1}")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return make_graph(n, edges, labels)


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite((m, n))


def rook(n: int) -> Graph:
    """K_n x K_n as a Cartesian product; labels carry 1-based (row,column)."""
    kn = make_graph(n, itertools.combinations(range(n), 2), [str(i + 1) for i in range(n)])
    return cartesian_product(kn, kn)


def folded_rook(n: int) -> Graph:
    """Vertices (i,j) with 1 <= j <= i <= n; adjacent when the pairs meet."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    edges = []
    for a, (i, j) in enumerate(pairs):
        for b in range(a + 1, len(pairs)):
            k, l = pairs[b]
            if {i, j} & {k, l}:
                edges.append((a, b))
    return make_graph(len(pairs), edges, [f"({i},{j})" for i, j in pairs])


def afr(parts: tuple[int, ...]) -> Graph:
    """Folded rook altered per part list: each block's diagonal square is one
    vertex, and edges inside any single cross-product block are removed.

    Built directly from that description; tests cross-check small cases
    against a literal contract-the-folded-rook oracle.
    """
    if not parts or any(p < 1 for p in parts):
        raise GraphConstructionError("part sizes must be positive and nonempty")
    n = sum(parts)
    if n > WORD_LIMIT:
        raise SizeLimit(f"{n} base vertices exceed the {WORD_LIMIT}-vertex cap")
    part_of: dict[int, int] = {}
    x = 1
    for k, size in enumerate(parts):
        for _ in range(size):
            part_of[x] = k
            x += 1
    ell = len(parts)
    pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, i)
        if part_of[i] != part_of[j]
    ]
    labels = [str(k + 1) for k in range(ell)] + [f"({i},{j})" for i, j in pairs]
    edges = []
    for p, (i, j) in enumerate(pairs):
        pv = ell + p
        for k in range(ell):
            if part_of[i] == k or part_of[j] == k:
                edges.append((k, pv))
        for q in range(p + 1, len(pairs)):
            i2, j2 = pairs[q]
            if not ({i, j} & {i2, j2}):
                continue
            same_block = {part_of[i], part_of[j]} == {part_of[i2], part_of[j2]}
            if not same_block:
                edges.append((pv, ell + q))
    return make_graph(ell + len(pairs), edges, labels)


def threshold_graph(seq: str) -> Graph:
    """Grow from one vertex, adding each later vertex isolated or universal."""
    if not seq or any(c not in "iu" for c in seq):
        raise GraphConstructionError("creation sequence must be nonempty over 'i'/'u'")
    edges = []
    for v, flag in enumerate(seq):
        if flag == "u" and v > 0:
            edges.extend((u, v) for u in range(v))
    return make_graph(len(seq), edges)


def matching_join(g: Graph, h: Graph, matching: tuple[int, ...] | None = None) -> Graph:
    """Disjoint copies of g and h joined by a perfect matching; ``matching[i]``
    is the h-vertex matched to g-vertex i (identity when omitted)."""
    if g.n != h.n:
        raise GraphConstructionError("matching join requires graphs of equal order")
    sigma = tuple(range(g.n)) if matching is None else tuple(matching)
    if sorted(sigma) != list(range(g.n)):
        raise GraphConstructionError("matching must be a permutation of the h-vertices")
    base = disjoint_union(g, h)
    extra = [(i, g.n + sigma[i]) for i in range(g.n)]
    adj = list(base.adj)
    for u, v in extra:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(base.n, tuple(adj), base.labels)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    rng = random.Random(seed)
    if n <= 1:
        return empty(n)
    if n == 2:
        return make_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return make_graph(n, edges)


def random_split(n: int, clique_size: int, edge_prob: float, seed: int) -> Graph:
    """Clique on the first ``clique_size`` vertices, independent set on the
    rest, each cross pair kept with probability ``edge_prob``. Isolated
    vertices are allowed."""
    if not 0 <= clique_size <= n:
        raise GraphConstructionError("clique size must lie within the vertex count")
    rng = random.Random(seed)
    edges = list(itertools.combinations(range(clique_size), 2))
    for c in range(clique_size):
        for i in range(clique_size, n):
            if rng.random() < edge_prob:
                edges.append((c, i))
    return make_graph(n, edges)


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """Erdos-Renyi style source for corpora and randomized checks."""
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return make_graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    if isinstance(spec, Complete):
        return complete(spec.n)
    if isinstance(spec, Empty):
        return empty(spec.n)
    if isinstance(spec, Path):
        return path(spec.n)
    if isinstance(spec, Cycle):
        return cycle(spec.n)
    if isinstance(spec, Star):
        return star(spec.leaves)
    if isinstance(spec, CompleteBipartite):
        return complete_bipartite(spec.m, spec.n)
    if isinstance(spec, CompleteMultipartite):
        return complete_multipartite(spec.parts)
    if isinstance(spec, Rook):
        return rook(spec.n)
    if isinstance(spec, FoldedRook):
        return folded_rook(spec.n)
    if isinstance(spec, Afr):
        return afr(spec.parts)
    if isinstance(spec, Threshold):
        return threshold_graph(spec.seq)
    if isinstance(spec, MatchingJoin):
        return matching_join(generate(spec.left), generate(spec.right), spec.matching)
    if isinstance(spec, RandomTree):
        return random_tree(spec.n, spec.seed)
    if isinstance(spec, RandomSplit):
        return random_split(spec.n, spec.clique_size, spec.edge_prob, spec.seed)
    raise GraphConstructionError(f"unknown family spec {spec!r}")


# ---------------------------------------------------------------------------
# predicted reconfiguration constructions


def predicted_rook_reconfig(n: int, large: bool = False) -> Graph:
    """Two copies of the n-fold product of K_n glued along the tuples whose
    coordinates are a permutation of 1..n."""
    if n < 1:
        raise GraphConstructionError("order must be at least 1")
    total = 2 * n**n - math.factorial(n)
    if not large and total > WORD_LIMIT:
        raise SizeLimit(
            f"{total} vertices exceed the {WORD_LIMIT}-vertex cap; pass large=True"
        )
    if total > LARGE_LIMIT:
        raise SizeLimit(f"{total} vertices exceed the {LARGE_LIMIT} cap")
    full = set(range(1, n + 1))
    tuples = list(itertools.product(range(1, n + 1), repeat=n))
    is_perm = {t: set(t) == full for t in tuples}

    def inverse(t: tuple) -> tuple:
        inv = [0] * n
        for pos, val in enumerate(t):
            inv[val - 1] = pos + 1
        return tuple(inv)

    # A shared vertex is one underlying object seen from both copies; seen
    # from the second copy it carries the inverse tuple, so the gluing pairs
    # each permutation with its inverse rather than with itself.
    index: dict[tuple, int] = {}
    labels: list[str] = []
    copy_index: list[dict[tuple, int]] = [{}, {}]
    for t in tuples:
        if is_perm[t]:
            index[t] = len(labels)
            labels.append("".join(map(str, t)))
            copy_index[0][t] = index[t]
    for t in tuples:
        if is_perm[t]:
            copy_index[1][t] = index[inverse(t)]
    for side, tag in enumerate("ab"):
        for t in tuples:
            if not is_perm[t]:
                copy_index[side][t] = len(labels)
                labels.append("".join(map(str, t)) + tag)
    edges = set()
    for side in (0, 1):
        look = copy_index[side]
        for t in tuples:
            a = look[t]
            for pos in range(n):
                for val in range(t[pos] + 1, n + 1):
                    t2 = t[:pos] + (val,) + t[pos + 1 :]
                    b = look[t2]
                    edges.add((min(a, b), max(a, b)))
    adj = [0] * total
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(total, tuple(adj), tuple(labels))


def predicted_join_reconfig(
    g: Graph, h: Graph, rg: ReconfigGraph, rh: ReconfigGraph
) -> Graph:
    """Join of the two reconfiguration graphs' disjoint union with the
    Cartesian product of the hosts: a set-vertex meets a pair-vertex exactly
    when the set contains one of the pair's endpoints."""
    if universal_vertices(g) or universal_vertices(h):
        raise UniversalVertexPresent("the prediction needs universal-vertex-free hosts")
    kg, kh = len(rg.sets), len(rh.sets)
    pair_base = kg + kh
    n = pair_base + g.n * h.n
    adj = [0] * n
    for u, v in rg.edges.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for u, v in rh.edges.edges():
        adj[kg + u] |= 1 << (kg + v)
        adj[kg + v] |= 1 << (kg + u)
    prod = cartesian_product(g, h)
    for u, v in prod.edges():
        adj[pair_base + u] |= 1 << (pair_base + v)
        adj[pair_base + v] |= 1 << (pair_base + u)
    for u in range(g.n):
        for v in range(h.n):
            p = pair_base + u * h.n + v
            for i, m in enumerate(rg.sets):
                if m >> u & 1:
                    adj[p] |= 1 << i
                    adj[i] |= 1 << p
            for i, m in enumerate(rh.sets):
                if m >> v & 1:
                    adj[p] |= 1 << (kg + i)
                    adj[kg + i] |= 1 << p
    labels = (
        [f"G{lbl}" for lbl in rg.set_labels()]
        + [f"H{lbl}" for lbl in rh.set_labels()]
        + [f"({u},{v})" for u in range(g.n) for v in range(h.n)]
    )
    if n > LARGE_LIMIT:
        raise SizeLimit(f"predicted graph on {n} vertices exceeds the {LARGE_LIMIT} cap")
    return Graph(n, tuple(adj), tuple(labels))


# ---------------------------------------------------------------------------
# exhaustive small-graph enumeration


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on exactly n
    vertices, sorted by canonical string. Each class on n vertices arises by
    attaching a new vertex to some class on n-1 vertices, so the previous
    level is extended by every attachment mask and deduplicated canonically.
    """
    if n > MAX_ENUMERATION_ORDER:
        raise SizeLimit(f"exhaustive enumeration is bounded at n<={MAX_ENUMERATION_ORDER}")
    if n < 0:
        raise GraphConstructionError("order must be nonnegative")
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[str, Graph] = {}
    for g in graphs_of_order(n - 1):
        for attach in range(1 << (n - 1)):
            adj = [a | ((attach >> v & 1) << (n - 1)) for v, a in enumerate(g.adj)]
            adj.append(attach)
            cand = Graph(n, tuple(adj))
            cf = canonical_form(cand)
            if cf.string not in seen:
                seen[cf.string] = relabel(cand, cf.relabeling)
    return tuple(seen[key] for key in sorted(seen))


def graphs_upto(n: int) -> list[Graph]:
    """All isomorphism classes of orders 1..n, smaller orders first."""
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(graphs_of_order(k))
    return out


# ---------------------------------------------------------------------------
# spec mini-language


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise FormatError(f"{what} must be an integer, got {text!r}") from exc


def _ints(text: str, what: str) -> tuple[int, ...]:
    return tuple(_int(p, what) for p in text.split(","))


def _kwargs(segments: list[str], what: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for seg in segments:
        if "=" not in seg:
            raise FormatError(f"expected key=value in {what}, got {seg!r}")
        key, _, val = seg.partition("=")
        out[key] = val
    return out


def _arg(segs: list[str], name: str) -> str:
    if not segs or not segs[0]:
        raise FormatError(f"family {name!r} needs an argument")
    return segs[0]


def parse_spec(text: str) -> FamilySpec:
    """Parse the family mini-language; raises FormatError on bad input."""
    if not text:
        raise FormatError("empty family spec")
    name, _, rest = text.partition(":")
    name = name.lower()
    if name == "mjoin":
        parts = rest.split("|")
        if len(parts) not in (2, 3):
            raise FormatError("mjoin takes left|right[|matching]")
        matching = None
        if len(parts) == 3 and parts[2] not in ("", "id", "identity"):
            matching = _ints(parts[2], "matching")
        return MatchingJoin(parse_spec(parts[0]), parse_spec(parts[1]), matching)
    segs = rest.split(":") if rest else []
    if name in ("complete", "kn"):
        return Complete(_int(_arg(segs, name), "order"))
    if name == "empty":
        return Empty(_int(_arg(segs, name), "order"))
    if name == "path":
        return Path(_int(_arg(segs, name), "order"))
    if name == "cycle":
        return Cycle(_int(_arg(segs, name), "order"))
    if name == "star":
        return Star(_int(_arg(segs, name), "leaf count"))
    if name == "kmn":
        vals = _ints(_arg(segs, name), "part size")
        if len(vals) != 2:
            raise FormatError("kmn takes exactly two part sizes")
        return CompleteBipartite(vals[0], vals[1])
    if name in ("multipartite", "kpartite"):
        return CompleteMultipartite(_ints(_arg(segs, name), "part size"))
    if name == "rook":
        return Rook(_int(_arg(segs, name), "order"))
    if name in ("foldedrook", "frook"):
        return FoldedRook(_int(_arg(segs, name), "order"))
    if name == "afr":
        return Afr(_ints(_arg(segs, name), "part size"))
    if name == "threshold":
        seq = _arg(segs, name)
        if any(c not in "iu" for c in seq):
            raise FormatError("threshold takes a nonempty sequence over 'i'/'u'")
        return Threshold(seq)
    if name == "tree":
        kw = _kwargs(segs[1:], "tree")
        if "seed" not in kw:
            raise FormatError("tree requires seed=<int>")
        return RandomTree(_int(_arg(segs, name), "order"), _int(kw["seed"], "seed"))
    if name == "split":
        kw = _kwargs(segs[1:], "split")
        if "seed" not in kw:
            raise FormatError("split requires seed=<int>")
        n = _int(_arg(segs, name), "order")
        clique = _int(kw.get("clique", str(n // 2)), "clique size")
        try:
            prob = float(kw.get("p", "0.5"))
        except ValueError as exc:
            raise FormatError("p must be a float") from exc
        return RandomSplit(n, clique, prob, _int(kw["seed"], "seed"))
    raise FormatError(f"unknown family {name!r}")
