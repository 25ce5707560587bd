"""Canonical labelings and isomorphism tests.

The engine refines the unit partition to its coarsest equitable partition
(splitting cells by neighbour counts against every cell), then backtracks:
pick the first smallest non-singleton cell, individualize one vertex per
candidate class, re-refine, and recurse. The canonical labeling is the one
whose relabeled adjacency rows compare least; the canonical string is the
graph6 encoding of that relabeled graph, so two graphs are isomorphic
exactly when their canonical strings match.

Two prunings keep symmetric inputs (complete bipartite blow-ups, glued
products, folded rooks) tractable, and neither can change the minimum:

* exact twins inside the target cell are interchangeable by a transposition,
  so only one branches;
* every pair of leaves with equal keys certifies an automorphism; at each
  node, candidates reachable from an already-explored candidate by a
  discovered automorphism that fixes the individualized base pointwise span
  an identical subtree and are skipped.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeLimit
from .formats import graph6_encode
from .graphs import Graph, bits, relabel

CANONICAL_LIMIT = 4096
MAX_GENERATORS = 256


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical graph6 string plus the relabeling (old -> new) that attains it."""

    n: int
    string: str
    relabeling: tuple[int, ...]


def _cell_mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest stable refinement of ``cells`` under neighbour counting."""
    cells = [list(c) for c in cells]
    queue: deque[int] = deque(_cell_mask(c) for c in cells)
    while queue:
        smask = queue.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                i += 1
                continue
            parts = [groups[k] for k in sorted(groups)]
            cells[i : i + 1] = parts
            queue.extend(_cell_mask(p) for p in parts)
            i += len(parts)
    return cells


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    """One vertex per interchangeable pair; swapping exact twins is an
    automorphism, so only one branch per class is explored."""
    reps: list[int] = []
    for v in cell:
        if any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
            continue
        reps.append(v)
    return reps


def _leaf_key(
    adj: tuple[int, ...], n: int, cells: list[list[int]]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pos = [0] * n
    for new, cell in enumerate(cells):
        pos[cell[0]] = new
    rows = [0] * n
    for new, cell in enumerate(cells):
        m = 0
        for u in bits(adj[cell[0]]):
            m |= 1 << pos[u]
        rows[new] = m
    return tuple(rows), tuple(pos)


def _automorphism_from(
    adj: tuple[int, ...], n: int, pos_a: tuple[int, ...], pos_b: tuple[int, ...]
) -> tuple[int, ...] | None:
    """Old->old map sending labeling a onto labeling b; None unless it is a
    genuine non-identity automorphism."""
    inv_b = [0] * n
    for old, new in enumerate(pos_b):
        inv_b[new] = old
    sigma = tuple(inv_b[pos_a[v]] for v in range(n))
    if sigma == tuple(range(n)):
        return None
    for v in range(n):
        image = 0
        for u in bits(adj[v]):
            image |= 1 << sigma[u]
        if image != adj[sigma[v]]:
            return None
    return sigma


class _Search:
    def __init__(self, adj: tuple[int, ...], n: int):
        self.adj = adj
        self.n = n
        self.best_rows: tuple[int, ...] | None = None
        self.best_pos: tuple[int, ...] | None = None
        self.first_rows: tuple[int, ...] | None = None
        self.first_pos: tuple[int, ...] | None = None
        self.generators: list[tuple[int, ...]] = []
        self._seen_gens: set[tuple[int, ...]] = set()

    def _note_generator(self, pos: tuple[int, ...], other: tuple[int, ...]) -> None:
        if len(self.generators) >= MAX_GENERATORS:
            return
        sigma = _automorphism_from(self.adj, self.n, pos, other)
        if sigma is not None and sigma not in self._seen_gens:
            self._seen_gens.add(sigma)
            self.generators.append(sigma)

    def _leaf(self, cells: list[list[int]]) -> None:
        rows, pos = _leaf_key(self.adj, self.n, cells)
        if self.first_rows is None:
            self.first_rows, self.first_pos = rows, pos
        elif rows == self.first_rows:
            self._note_generator(pos, self.first_pos)
        if self.best_rows is None or rows < self.best_rows:
            self.best_rows, self.best_pos = rows, pos
        elif rows == self.best_rows and pos != self.best_pos:
            self._note_generator(pos, self.best_pos)

    def _orbit_of(self, seeds: list[int], base: list[int]) -> set[int]:
        """Closure of ``seeds`` under the discovered automorphisms that fix
        every vertex of ``base``."""
        usable = [
            sigma
            for sigma in self.generators
            if all(sigma[b] == b for b in base)
        ]
        orbit = set(seeds)
        if not usable:
            return orbit
        frontier = list(seeds)
        while frontier:
            v = frontier.pop()
            for sigma in usable:
                w = sigma[v]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        return orbit

    def run(self, cells: list[list[int]], base: list[int]) -> None:
        target = -1
        size = self.n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target = idx
                size = len(cell)
        if target == -1:
            self._leaf(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in _twin_representatives(self.adj, cell):
            if explored and v in self._orbit_of(explored, base):
                continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            self.run(_refine(self.adj, child), base + [v])
            explored.append(v)


def canonical_form(g: Graph, max_n: int = CANONICAL_LIMIT) -> CanonicalForm:
    if g.n > max_n:
        raise SizeLimit(f"canonical form on {g.n} vertices exceeds the bound {max_n}")
    n = g.n
    if n == 0:
        return CanonicalForm(0, graph6_encode(g), ())
    search = _Search(g.adj, n)
    search.run(_refine(g.adj, [list(range(n))]), [])
    canon = Graph(n, search.best_rows)
    return CanonicalForm(n, graph6_encode(canon), search.best_pos)


@lru_cache(maxsize=8192)
def _canonical_string_cached(g: Graph) -> str:
    return canonical_form(g).string


def canonical_string(g: Graph) -> str:
    return _canonical_string_cached(g)


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_string(g) == canonical_string(h)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled graph itself (labels dropped)."""
    cf = canonical_form(g)
    return relabel(Graph(g.n, g.adj), cf.relabeling)
