"""Corpus scanners: sweep a stream of graphs and collect counterexamples.

A counterexample here is a finding, not a failure; the conjecture scans in
particular are expected to surface anything interesting rather than abort.
Each requested check gets its own report, all produced in a single pass.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from multiprocessing import Pool

from .domination import classify_vertices, enumerate_mds, is_dominating
from .errors import FormatError, SizeLimit
from .families import graphs_of_order, graphs_upto, parse_spec, generate, random_split, random_tree
from .formats import graph6_decode, graph6_encode
from .graphs import (
    Graph,
    bits,
    closed_neighborhood,
    delete_closed_neighborhood,
    girth,
    is_tree,
)
from .recognize import star_forest_form, threshold_sequence, universal_additions
from .reconfig import _adjacent, build_gamma_graph, build_reconfig_graph

log = logging.getLogger(__name__)

SCAN_CHECKS = (
    "threshold_iff",
    "empty_iff",
    "tree_conjecture",
    "girth_suspicion",
    "observation_suite",
)


@dataclass
class ScanReport:
    check: str
    corpus: str
    examined: int
    skipped: int
    counterexamples: list[dict]
    stats: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "id": self.check,
            "corpus": self.corpus,
            "examined": self.examined,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _scan_threshold_iff(g: Graph, r, out: list[dict], stats: dict) -> None:
    k = len(r.sets)
    r_complete = r.edges.edge_count() == k * (k - 1) // 2
    seq = threshold_sequence(g)
    if r_complete != (seq is not None):
        out.append({
            "graph6": graph6_encode(g),
            "r_complete": r_complete,
            "threshold": seq is not None,
        })
        return
    if r_complete and seq is not None and k != 1 + universal_additions(seq):
        out.append({
            "graph6": graph6_encode(g),
            "clique_order": k,
            "universal_additions": universal_additions(seq),
        })


def _scan_empty_iff(g: Graph, r, out: list[dict], stats: dict) -> None:
    if r.edges.edge_count() == 0:
        if g.edge_count() != 0 or len(r.sets) != 1:
            out.append({
                "graph6": graph6_encode(g),
                "r_order": len(r.sets),
                "host_edges": g.edge_count(),
            })


def _scan_tree_conjecture(g: Graph, r, out: list[dict], stats: dict) -> None:
    r_tree = is_tree(r.edges)
    in_family = star_forest_form(g) is not None
    if r_tree != in_family:
        out.append({
            "graph6": graph6_encode(g),
            "r_is_tree": r_tree,
            "empty_plus_star": in_family,
            "r": graph6_encode(r.edges),
        })


def _scan_girth_suspicion(g: Graph, r, out: list[dict], stats: dict) -> None:
    if is_tree(r.edges):
        return
    gi = girth(r.edges)
    key = "infinite" if gi is None else str(gi)
    hist = stats.setdefault("girth_histogram", {})
    hist[key] = hist.get(key, 0) + 1
    if gi is None or gi > 5:
        out.append({
            "graph6": graph6_encode(g),
            "r_girth": key,
            "r": graph6_encode(r.edges),
        })
    elif gi < 5:
        stats["girth_below_5"] = stats.get("girth_below_5", 0) + 1


def _scan_observations(g: Graph, r, out: list[dict], stats: dict) -> None:
    n = g.n
    full = g.vertex_mask
    min_degree = min(g.degrees()) if n else 0

    def report(name: str, detail: dict) -> None:
        entry = {"graph6": graph6_encode(g), "observation": name}
        entry.update(detail)
        out.append(entry)

    for s in range(1 << n):
        if not is_dominating(g, s):
            continue
        profile = classify_vertices(g, s)
        for v in bits(s):
            if not (g.adj[v] & s) and not (profile.critical >> v & 1):
                report("isolated_in_set_is_critical", {"s": list(bits(s)), "v": v})
        for v in bits(profile.a2):
            if g.adj[v] & ~profile.n2:
                report("a2_neighbours_inside_n2", {"s": list(bits(s)), "v": v})
        if profile.a1.bit_count() > profile.n1.bit_count():
            report("a1_bounded_by_n1", {"s": list(bits(s))})
    if min_degree >= 1:
        for m in r.sets:
            if not is_dominating(g, full & ~m):
                report("complement_dominates", {"m": list(bits(m))})
    # independent-set deletion embeds the smaller reconfiguration graph
    for s in range(1, 1 << n):
        if any(g.adj[v] & s for v in bits(s)):
            continue
        sub, index = delete_closed_neighborhood(g, s)
        back = {new: old for old, new in index.items()}
        inner = list(enumerate_mds(sub))
        lifted = sorted(
            s | sum(1 << back[v] for v in bits(m)) for m in inner
        )
        forbidden = closed_neighborhood(g, s) & ~s
        actual = [m for m in r.sets if (m & s) == s and not (m & forbidden)]
        if lifted != actual:
            report("independent_deletion_embedding", {"s": list(bits(s))})
            continue
        lifted_of = {s | sum(1 << back[v] for v in bits(m)): m for m in inner}
        for i in range(len(lifted)):
            for j in range(i + 1, len(lifted)):
                if _adjacent(sub.adj, lifted_of[lifted[i]], lifted_of[lifted[j]]) != _adjacent(
                    g.adj, lifted[i], lifted[j]
                ):
                    report(
                        "independent_deletion_embedding",
                        {"s": list(bits(s)), "pair": [list(bits(lifted[i])), list(bits(lifted[j]))]},
                    )
    # the token-sliding graph on minimum sets is the induced subgraph
    gamma_graph = build_gamma_graph(g)
    minimum = list(gamma_graph.sets)
    idx_in_r = [r.sets.index_of(m) for m in minimum]
    for a in range(len(minimum)):
        for b in range(a + 1, len(minimum)):
            induced_edge = r.edges.has_edge(idx_in_r[a], idx_in_r[b])
            if induced_edge != gamma_graph.edges.has_edge(a, b):
                report(
                    "gamma_graph_induced",
                    {"pair": [list(bits(minimum[a])), list(bits(minimum[b]))]},
                )
    sizes = {m.bit_count() for m in r.sets}
    if len(sizes) == 1 and len(minimum) == len(r.sets):
        if gamma_graph.edges.edge_count() != r.edges.edge_count():
            report("gamma_graph_equals_r", {})


_SCAN_FUNCS = {
    "threshold_iff": _scan_threshold_iff,
    "empty_iff": _scan_empty_iff,
    "tree_conjecture": _scan_tree_conjecture,
    "girth_suspicion": _scan_girth_suspicion,
    "observation_suite": _scan_observations,
}


def _eval_one(args: tuple[str, tuple[str, ...], int | None]) -> dict:
    record, checks, limit = args
    g = graph6_decode(record)
    r = build_reconfig_graph(g, limit=limit)
    result: dict = {"mds": len(r.sets), "checks": {}}
    for check in checks:
        out: list[dict] = []
        stats: dict = {}
        _SCAN_FUNCS[check](g, r, out, stats)
        result["checks"][check] = {"counterexamples": out, "stats": stats}
    return result


def _merge_stats(total: dict, part: dict) -> None:
    for key, val in part.items():
        if isinstance(val, dict):
            bucket = total.setdefault(key, {})
            for k2, v2 in val.items():
                bucket[k2] = bucket.get(k2, 0) + v2
        elif isinstance(val, (int, float)):
            total[key] = total.get(key, 0) + val
        else:
            total[key] = val


def scan_corpus(
    graphs: list[Graph],
    checks: list[str] | None = None,
    corpus: str = "",
    jobs: int = 1,
    skipped: int = 0,
    limit: int | None = None,
) -> list[ScanReport]:
    chosen = tuple(checks) if checks else SCAN_CHECKS
    for check in chosen:
        if check not in _SCAN_FUNCS:
            raise KeyError(f"unknown scan check {check!r}; known: {', '.join(SCAN_CHECKS)}")
    start = time.perf_counter()
    payload = [(graph6_encode(g), chosen, limit) for g in graphs]
    if jobs > 1 and len(payload) > 1:
        with Pool(jobs) as pool:
            results = pool.map(_eval_one, payload)
    else:
        results = [_eval_one(item) for item in payload]
    per_check: dict[str, dict] = {
        c: {"counterexamples": [], "stats": {}} for c in chosen
    }
    max_mds = 0
    for res in results:
        max_mds = max(max_mds, res["mds"])
        for check in chosen:
            part = res["checks"][check]
            per_check[check]["counterexamples"].extend(part["counterexamples"])
            _merge_stats(per_check[check]["stats"], part["stats"])
    elapsed = round((time.perf_counter() - start) * 1000.0, 3)
    reports = []
    for check in chosen:
        stats = dict(per_check[check]["stats"])
        stats["max_minimal_sets"] = max_mds
        reports.append(
            ScanReport(
                check=check,
                corpus=corpus,
                examined=len(graphs),
                skipped=skipped,
                counterexamples=per_check[check]["counterexamples"],
                stats=stats,
                elapsed_ms=elapsed,
            )
        )
    return reports


def load_corpus(
    source: str,
    records: list[str] | None = None,
) -> tuple[list[Graph], int, str]:
    """Resolve a corpus description into graphs plus a skipped-record count.

    Sources: ``upto:N`` (all isomorphism classes of orders 1..N), ``order:N``,
    ``trees:COUNT:n=N:seed=S``, ``splits:COUNT:n=N:seed=S[:clique=K][:p=P]``,
    any family spec (a one-graph corpus), or explicit graph6 ``records``
    (malformed lines are skipped with a logged warning).
    """
    if records is not None:
        graphs = []
        skipped = 0
        for line in records:
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(graph6_decode(line))
            except (FormatError, SizeLimit) as exc:
                skipped += 1
                log.warning("skipping malformed graph6 record %r: %s", line, exc)
        return graphs, skipped, source or "records"
    name, _, rest = source.partition(":")
    segs = rest.split(":") if rest else []
    if name == "upto":
        return graphs_upto(int(segs[0])), 0, source
    if name == "order":
        return list(graphs_of_order(int(segs[0]))), 0, source
    if name in ("trees", "splits"):
        if len(segs) < 1:
            raise FormatError(f"{name} needs a count")
        count = int(segs[0])
        kw = dict(seg.partition("=")[::2] for seg in segs[1:])
        if "seed" not in kw:
            raise FormatError(f"{name} corpora require an explicit seed")
        n = int(kw.get("n", "8"))
        seed = int(kw["seed"])
        if name == "trees":
            return [random_tree(n, seed + i) for i in range(count)], 0, source
        clique = int(kw.get("clique", str(n // 2)))
        prob = float(kw.get("p", "0.5"))
        return (
            [random_split(n, clique, prob, seed + i) for i in range(count)],
            0,
            source,
        )
    return [generate(parse_spec(source))], 0, source
