"""Domination predicates, vertex classification, and minimal-set enumeration.

Two independent enumeration routes are kept side by side on purpose:
``enumerate_mds`` walks a pruned inclusion/exclusion tree, while
``exhaustive_minimal_sets`` filters every subset of the vertex set. The
exhaustive scan is the semantic definition; the pruned walk must match it
bit-exactly and the test suite enforces that.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

from .errors import NotDominating, SizeLimit
from .graphs import Graph, bits

ENUMERATION_LIMIT = 24
DEFAULT_MDS_LIMIT = 200_000
MDS_LIMIT_ENV = "DOMRECON_MDS_LIMIT"


def mds_limit() -> int:
    raw = os.environ.get(MDS_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_MDS_LIMIT


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex is in ``s`` or adjacent to a vertex of ``s``."""
    covered = 0
    for v in bits(s):
        covered |= g.closed(v)
    return covered == g.vertex_mask


def is_minimal_dominating(g: Graph, s: int) -> bool:
    """True iff ``s`` dominates and no proper subset of it does."""
    if not is_dominating(g, s):
        return False
    for v in bits(s):
        rest = s & ~(1 << v)
        covered = 0
        for u in bits(rest):
            covered |= g.closed(u)
        if covered == g.vertex_mask:
            return False
    return True


@dataclass(frozen=True)
class DominationProfile:
    """Partition of the host graph induced by a dominating set ``s``.

    ``critical`` holds the vertices whose removal breaks domination, split
    into ``a1`` (a private neighbour with a unique dominator exists nearby)
    and ``a2`` (the vertex is its own sole private neighbour). ``n1``/``n2``
    split the complement of ``s`` by dominator count; ``privates`` maps each
    critical vertex to the set left undominated by its removal.
    """

    s: int
    critical: int
    a1: int
    a2: int
    supported: int
    n1: int
    n2: int
    privates: dict[int, int]


def classify_vertices(g: Graph, s: int) -> DominationProfile:
    if not is_dominating(g, s):
        raise NotDominating(f"set {sorted(bits(s))} does not dominate the graph")
    dominator_count = [0] * g.n
    sole_dominator = [-1] * g.n
    for u in range(g.n):
        doms = g.closed(u) & s
        dominator_count[u] = doms.bit_count()
        if dominator_count[u] == 1:
            sole_dominator[u] = doms.bit_length() - 1
    n1 = 0
    n2 = 0
    outside = g.vertex_mask & ~s
    for u in bits(outside):
        if dominator_count[u] == 1:
            n1 |= 1 << u
        else:
            n2 |= 1 << u
    privates: dict[int, int] = {}
    critical = 0
    for v in bits(s):
        priv = 0
        for u in bits(g.closed(v)):
            if sole_dominator[u] == v:
                priv |= 1 << u
        if priv:
            privates[v] = priv
            critical |= 1 << v
    a1 = 0
    for v in bits(critical):
        if g.closed(v) & n1:
            a1 |= 1 << v
    return DominationProfile(
        s=s,
        critical=critical,
        a1=a1,
        a2=critical & ~a1,
        supported=s & ~critical,
        n1=n1,
        n2=n2,
        privates=privates,
    )


@dataclass(frozen=True)
class MdsCollection:
    """All minimal dominating sets of a host graph, in ascending mask order."""

    n: int
    sets: tuple[int, ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.sets)}

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i: int) -> int:
        return self.sets[i]

    def index_of(self, mask: int) -> int:
        return self.index[mask]

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def to_lists(self) -> list[list[int]]:
        return [list(bits(m)) for m in self.sets]

    def to_json(self) -> str:
        import json

        return json.dumps(self.to_lists(), separators=(",", ":"))


def exhaustive_minimal_sets(g: Graph, max_n: int = ENUMERATION_LIMIT) -> MdsCollection:
    """Oracle path: scan all 2^n subsets and keep the minimal dominating ones."""
    if g.n > max_n:
        raise SizeLimit(f"exhaustive scan of 2^{g.n} subsets exceeds the n<={max_n} bound")
    sets = tuple(s for s in range(1 << g.n) if is_minimal_dominating(g, s))
    return MdsCollection(g.n, sets)


def enumerate_mds(g: Graph, max_n: int = ENUMERATION_LIMIT) -> MdsCollection:
    """Pruned search: once the working set dominates, every extension along
    the branch is a superset of a dominating set, so the branch is cut."""
    if g.n > max_n:
        raise SizeLimit(f"enumeration on {g.n} vertices exceeds the n<={max_n} bound")
    n = g.n
    if n == 0:
        return MdsCollection(0, (0,))
    full = g.vertex_mask
    closed = [g.closed(v) for v in range(n)]
    # still_coverable[i] = vertices dominatable by some vertex >= i
    still_coverable = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        still_coverable[v] = still_coverable[v + 1] | closed[v]
    found: list[int] = []

    def walk(i: int, s: int, dominated: int) -> None:
        if dominated == full:
            if is_minimal_dominating(g, s):
                found.append(s)
            return
        if i == n:
            return
        if ~dominated & full & ~still_coverable[i]:
            return
        walk(i + 1, s, dominated)
        walk(i + 1, s | (1 << i), dominated | closed[i])

    walk(0, 0, 0)
    found.sort()
    return MdsCollection(n, tuple(found))


def domination_number(g: Graph, max_n: int = ENUMERATION_LIMIT) -> int:
    collection = enumerate_mds(g, max_n=max_n)
    return min(m.bit_count() for m in collection.sets)


def minimum_mds(g: Graph, max_n: int = ENUMERATION_LIMIT) -> MdsCollection:
    """The gamma-sized members of the minimal-set collection."""
    collection = enumerate_mds(g, max_n=max_n)
    gamma = min(m.bit_count() for m in collection.sets)
    return MdsCollection(
        g.n, tuple(m for m in collection.sets if m.bit_count() == gamma)
    )
