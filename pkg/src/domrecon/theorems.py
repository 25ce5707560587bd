"""Named theorem checks over concrete inputs.

``verify_theorem(id, **params)`` dispatches to one check per claim and
returns a TheoremReport with verdict ``verified``, ``refuted`` (with a
re-checkable witness), or ``inapplicable`` when the hypotheses fail for the
given input. Isomorphism claims go through canonical forms.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .canonical import canonical_string, isomorphic
from .domination import (
    classify_vertices,
    domination_number,
    enumerate_mds,
    is_minimal_dominating,
)
from .families import (
    afr,
    complete,
    complete_multipartite,
    cycle,
    empty,
    matching_join,
    predicted_join_reconfig,
    predicted_rook_reconfig,
    rook,
    threshold_graph,
)
from .formats import graph6_encode
from .graphs import (
    Graph,
    bits,
    cartesian_product,
    closed_neighborhood,
    connected_components,
    delete_closed_neighborhood,
    diameter,
    disjoint_union,
    girth,
    induced_subgraph,
    is_forest,
    is_tree,
    join,
    universal_vertices,
)
from .recognize import multipartite_parts, split_partition, universal_additions
from .reconfig import _adjacent, build_reconfig_graph

Verdict = str  # "verified" | "refuted" | "inapplicable"
VERIFIED = "verified"
REFUTED = "refuted"
INAPPLICABLE = "inapplicable"


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    verdict: Verdict
    witness: dict | None = None
    stats: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "id": self.theorem,
            "params": {k: _json_value(v) for k, v in self.params.items()},
            "verdict": self.verdict,
            "witness": self.witness,
            "stats": self.stats,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _json_value(v):
    if isinstance(v, Graph):
        return graph6_encode(v)
    if isinstance(v, tuple):
        return list(v)
    return v


def _set_list(mask: int) -> list[int]:
    return list(bits(mask))


def _iso_outcome(built: Graph, predicted: Graph, context: dict):
    """Shared wrap-up for every 'R(...) is isomorphic to ...' claim."""
    if isomorphic(built, predicted):
        return VERIFIED, None, {
            "vertices": built.n,
            "edges": built.edge_count(),
            "canonical": canonical_string(built),
        }
    witness = dict(context)
    witness.update(
        built=graph6_encode(built),
        predicted=graph6_encode(predicted),
        built_order=built.n,
        predicted_order=predicted.n,
    )
    return REFUTED, witness, {}


def _check_families(n: int):
    results = {}
    for name, g, target in (
        (f"empty_{n}", empty(n), complete(1)),
        (f"complete_{n}", complete(n), complete(n)),
        ("cycle_5", cycle(5), cycle(5)),
    ):
        r = build_reconfig_graph(g)
        if not isomorphic(r.edges, target):
            return REFUTED, {
                "case": name,
                "graph": graph6_encode(g),
                "built": graph6_encode(r.edges),
                "expected": graph6_encode(target),
            }, {}
        results[name] = r.edges.n
    return VERIFIED, None, {"orders": results}


def _check_disjoint_union(g: Graph, h: Graph):
    built = build_reconfig_graph(disjoint_union(g, h)).edges
    predicted = cartesian_product(
        build_reconfig_graph(g).edges, build_reconfig_graph(h).edges
    )
    return _iso_outcome(
        built, predicted, {"g": graph6_encode(g), "h": graph6_encode(h)}
    )


def _check_union_empty(g: Graph, n: int):
    """Exact form: padding with isolated vertices forces them into every
    minimal set and leaves indices and adjacency untouched."""
    padded = disjoint_union(g, empty(n))
    pad_mask = ((1 << n) - 1) << g.n
    rg = build_reconfig_graph(g)
    rp = build_reconfig_graph(padded)
    expected_sets = tuple(m | pad_mask for m in rg.sets)
    if rp.sets.sets != expected_sets or rp.edges != rg.edges:
        return REFUTED, {
            "g": graph6_encode(g),
            "n": n,
            "built": graph6_encode(rp.edges),
            "expected": graph6_encode(rg.edges),
        }, {}
    return VERIFIED, None, {"vertices": rg.edges.n}


def _check_join_k1(g: Graph):
    if g.n == 0:
        return INAPPLICABLE, None, {"reason": "join with the 0-vertex graph degenerates"}
    built = build_reconfig_graph(join(g, complete(1))).edges
    predicted = join(build_reconfig_graph(g).edges, complete(1))
    return _iso_outcome(built, predicted, {"g": graph6_encode(g)})


def _check_join_general(g: Graph, h: Graph):
    if universal_vertices(g) or universal_vertices(h):
        return INAPPLICABLE, None, {"reason": "a host has a universal vertex"}
    rg = build_reconfig_graph(g)
    rh = build_reconfig_graph(h)
    predicted = predicted_join_reconfig(g, h, rg, rh)
    built = build_reconfig_graph(join(g, h)).edges
    return _iso_outcome(
        built, predicted, {"g": graph6_encode(g), "h": graph6_encode(h)}
    )


def _check_kmn(m: int, n: int):
    g = complete_multipartite((m, n))
    built = build_reconfig_graph(g).edges
    if m == 1 or n == 1:
        predicted = complete(2)
    else:
        predicted = complete_multipartite((2, m * n))
    return _iso_outcome(built, predicted, {"m": m, "n": n})


def _check_multipartite(parts: tuple[int, ...]):
    if len(parts) < 2 or any(p < 2 for p in parts):
        return INAPPLICABLE, None, {"reason": "needs at least two parts, all of size >= 2"}
    g = complete_multipartite(tuple(parts))
    built = build_reconfig_graph(g).edges
    return _iso_outcome(built, afr(tuple(parts)), {"parts": list(parts)})


def _check_rook(n: int):
    if n == 1:
        return INAPPLICABLE, None, {
            "reason": "degenerate order: the single tuple is a permutation",
            "predicted_order": predicted_rook_reconfig(1).n,
        }
    built = build_reconfig_graph(rook(n)).edges
    predicted = predicted_rook_reconfig(n, large=True)
    return _iso_outcome(built, predicted, {"n": n})


def _check_threshold_forward(seq: str):
    g = threshold_graph(seq)
    r = 1 + universal_additions(seq)
    built = build_reconfig_graph(g).edges
    verdict, witness, stats = _iso_outcome(built, complete(r), {"seq": seq})
    stats = dict(stats, expected_clique=r)
    return verdict, witness, stats


def _check_subgraph_lemma(g: Graph, s: int):
    for v in bits(s):
        if g.adj[v] & s:
            return INAPPLICABLE, None, {"reason": "the chosen set is not independent"}
    sub, index = delete_closed_neighborhood(g, s)
    back = {new: old for old, new in index.items()}
    lifted = []
    for m in enumerate_mds(sub):
        lift = s
        for v in bits(m):
            lift |= 1 << back[v]
        lifted.append(lift)
    lifted.sort()
    forbidden = closed_neighborhood(g, s) & ~s
    actual = [
        m for m in enumerate_mds(g) if (m & s) == s and not (m & forbidden)
    ]
    if lifted != actual:
        return REFUTED, {
            "g": graph6_encode(g),
            "s": _set_list(s),
            "lifted": [_set_list(m) for m in lifted],
            "actual": [_set_list(m) for m in actual],
        }, {}
    subsets = list(enumerate_mds(sub))
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            inner = _adjacent(sub.adj, subsets[i], subsets[j])
            outer = _adjacent(g.adj, lifted[i], lifted[j])
            if inner != outer:
                return REFUTED, {
                    "g": graph6_encode(g),
                    "s": _set_list(s),
                    "pair": [_set_list(lifted[i]), _set_list(lifted[j])],
                    "inner_adjacent": inner,
                    "outer_adjacent": outer,
                }, {}
    return VERIFIED, None, {"matched_sets": len(lifted)}


def _check_gnv_empty(g: Graph):
    deletions_empty = True
    bad_vertex = None
    for v in range(g.n):
        sub, _ = delete_closed_neighborhood(g, 1 << v)
        if sub.edge_count():
            deletions_empty = False
            bad_vertex = v
            break
    structured = multipartite_parts(g) is not None
    if deletions_empty == structured:
        return VERIFIED, None, {
            "all_deletions_empty": deletions_empty,
            "complete_multipartite": structured,
        }
    return REFUTED, {
        "g": graph6_encode(g),
        "all_deletions_empty": deletions_empty,
        "complete_multipartite": structured,
        "vertex_with_nonempty_deletion": bad_vertex,
    }, {}


def _check_forest_connected(g: Graph):
    if not is_forest(g):
        return INAPPLICABLE, None, {"reason": "input has a cycle"}
    r = build_reconfig_graph(g)
    comps = connected_components(r.edges)
    if len(comps) <= 1:
        return VERIFIED, None, {"vertices": r.edges.n}
    return REFUTED, {
        "g": graph6_encode(g),
        "components": len(comps),
        "r": graph6_encode(r.edges),
    }, {}


def _check_tree_lemma(g: Graph, m: int, s: int):
    if not is_tree(g):
        return INAPPLICABLE, None, {"reason": "input is not a tree"}
    if not is_minimal_dominating(g, m) or not (m >> s & 1):
        return INAPPLICABLE, None, {"reason": "set is not minimal dominating or misses the stem"}
    leaves = 0
    for v in bits(g.adj[s]):
        if g.degree(v) == 1:
            leaves |= 1 << v
    if not leaves:
        return INAPPLICABLE, None, {"reason": "chosen vertex is not a stem"}
    profile = classify_vertices(g, m)
    nonleaf_in_n1 = (g.adj[s] & ~leaves) & profile.n1
    if nonleaf_in_n1:
        return INAPPLICABLE, None, {
            "reason": "a non-leaf neighbour of the stem has a unique dominator"
        }
    m2 = (m | leaves) & ~(1 << s)
    ok = is_minimal_dominating(g, m2) and _adjacent(g.adj, m, m2)
    if ok:
        return VERIFIED, None, {"expanded": _set_list(m2)}
    return REFUTED, {
        "g": graph6_encode(g),
        "m": _set_list(m),
        "stem": s,
        "m2": _set_list(m2),
        "minimal": is_minimal_dominating(g, m2),
    }, {}


def _check_split_connected(g: Graph):
    parts = split_partition(g)
    if parts is None:
        return INAPPLICABLE, None, {"reason": "input is not a split graph"}
    _, independent = parts
    r = build_reconfig_graph(g)
    comps = connected_components(r.edges)
    dia = diameter(r.edges)
    bound = 2 * independent.bit_count() + 1
    stats = {
        "vertices": r.edges.n,
        "independent_size": independent.bit_count(),
        "diameter": dia,
        "bound": bound,
    }
    if len(comps) <= 1 and dia is not None and dia <= bound:
        return VERIFIED, None, stats
    return REFUTED, {
        "g": graph6_encode(g),
        "components": len(comps),
        "diameter": dia,
        "bound": bound,
    }, {}


def _check_split_lemma(g: Graph, m: int, v: int):
    parts = split_partition(g)
    if parts is None:
        return INAPPLICABLE, None, {"reason": "input is not a split graph"}
    clique, _ = parts
    if not is_minimal_dominating(g, m):
        return INAPPLICABLE, None, {"reason": "set is not minimal dominating"}
    if not (m >> v & 1) or not (clique >> v & 1):
        return INAPPLICABLE, None, {"reason": "vertex must lie in the set and the clique"}
    profile = classify_vertices(g, m)
    externals = profile.privates.get(v, 0) & ~(1 << v)
    if not externals:
        return INAPPLICABLE, None, {"reason": "no external private neighbours"}
    sub, index = induced_subgraph(g, externals)
    back = {new: old for old, new in index.items()}
    failures = []
    for mv in enumerate_mds(sub):
        lift = 0
        for u in bits(mv):
            lift |= 1 << back[u]
        m2 = (m | lift) & ~(1 << v)
        if not (is_minimal_dominating(g, m2) and _adjacent(g.adj, m, m2)):
            failures.append(_set_list(m2))
    if not failures:
        return VERIFIED, None, {"external_privates": _set_list(externals)}
    return REFUTED, {
        "g": graph6_encode(g),
        "m": _set_list(m),
        "v": v,
        "failing_sets": failures,
    }, {}


def _check_matching_join(g: Graph, h: Graph, matching: tuple[int, ...] | None = None):
    if g.n != h.n or g.n == 0:
        return INAPPLICABLE, None, {"reason": "hosts must have equal positive order"}
    degs_g = g.degrees()
    degs_h = h.degrees()
    if min(degs_g) < 2 or min(degs_h) < 1:
        return INAPPLICABLE, None, {"reason": "needs min degree 2 on one side and 1 on the other"}
    mg = matching_join(g, h, matching)
    side = (1 << g.n) - 1
    r = build_reconfig_graph(mg)
    if side not in r.sets:
        return REFUTED, {
            "graph": graph6_encode(mg),
            "missing_set": _set_list(side),
        }, {}
    idx = r.sets.index_of(side)
    deg = r.edges.degree(idx)
    if deg == 0:
        return VERIFIED, None, {"isolated_index": idx, "r_vertices": r.edges.n}
    return REFUTED, {
        "graph": graph6_encode(mg),
        "set": _set_list(side),
        "degree": deg,
    }, {}


def _check_product_k2(g: Graph):
    if g.n == 0 or min(g.degrees()) < 2:
        return INAPPLICABLE, None, {"reason": "needs min degree 2"}
    prod = cartesian_product(g, complete(2))
    r = build_reconfig_graph(prod)
    comps = connected_components(r.edges)
    if len(comps) > 1:
        return VERIFIED, None, {"components": len(comps), "vertices": r.edges.n}
    return REFUTED, {"g": graph6_encode(g), "r": graph6_encode(r.edges)}, {}


def _check_maxdegree(g: Graph):
    gi = girth(g)
    if gi is not None and gi < 5:
        return INAPPLICABLE, None, {"reason": f"girth {gi} is below 5"}
    r = build_reconfig_graph(g)
    gamma = domination_number(g)
    bound = g.n - gamma
    max_deg = max(r.edges.degrees()) if r.edges.n else 0
    if max_deg > bound:
        return REFUTED, {
            "g": graph6_encode(g),
            "max_degree": max_deg,
            "bound": bound,
        }, {}
    # every edge must be the unique expansion of an a1 vertex or the unique
    # contraction of an n2 vertex, with the exact added/removed sets
    profiles = {m: classify_vertices(g, m) for m in r.sets}
    for i, j in r.edges.edges():
        m1, m2 = r.sets[i], r.sets[j]
        for a, b in ((m1, m2), (m2, m1)):
            if not _edge_matches_form(g, profiles[a], a, b):
                return REFUTED, {
                    "g": graph6_encode(g),
                    "m1": _set_list(a),
                    "m2": _set_list(b),
                    "reason": "edge fits neither exact expansion nor contraction form",
                }, {}
    return VERIFIED, None, {
        "max_degree": max_deg,
        "bound": bound,
        "edges_checked": r.edges.edge_count(),
    }


def _edge_matches_form(g: Graph, profile, m1: int, m2: int) -> bool:
    removed = m1 & ~m2
    added = m2 & ~m1
    if removed and not (removed & (removed - 1)):
        v = removed.bit_length() - 1
        if profile.a1 >> v & 1 and added == profile.privates[v] & ~(1 << v):
            return True
    if added and not (added & (added - 1)):
        v = added.bit_length() - 1
        if profile.n2 >> v & 1 and removed == g.adj[v] & profile.a2:
            return True
    return False


_CHECKS = {
    "families": _check_families,
    "disjoint_union": _check_disjoint_union,
    "union_empty": _check_union_empty,
    "join_k1": _check_join_k1,
    "join_general": _check_join_general,
    "kmn": _check_kmn,
    "multipartite": _check_multipartite,
    "rook": _check_rook,
    "threshold_forward": _check_threshold_forward,
    "subgraph_lemma": _check_subgraph_lemma,
    "gnv_empty": _check_gnv_empty,
    "forest_connected": _check_forest_connected,
    "tree_lemma": _check_tree_lemma,
    "split_connected": _check_split_connected,
    "split_lemma": _check_split_lemma,
    "matching_join": _check_matching_join,
    "product_k2": _check_product_k2,
    "maxdegree": _check_maxdegree,
}

THEOREM_IDS = tuple(sorted(_CHECKS))


def verify_theorem(theorem: str, **params) -> TheoremReport:
    if theorem not in _CHECKS:
        raise KeyError(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREM_IDS)}")
    start = time.perf_counter()
    verdict, witness, stats = _CHECKS[theorem](**params)
    elapsed = (time.perf_counter() - start) * 1000.0
    return TheoremReport(
        theorem=theorem,
        params=params,
        verdict=verdict,
        witness=witness,
        stats=stats,
        elapsed_ms=round(elapsed, 3),
    )
