"""Operation layer behind both the HTTP routes and the CLI.

Every function takes a request model and returns a response model; the
routes bind them to paths and the CLI calls them directly (or forwards the
same payloads over HTTP in remote mode).
"""

from __future__ import annotations

from ..domination import enumerate_mds
from ..families import generate, graphs_of_order, parse_spec
from ..formats import graph6_decode, graph6_encode
from ..graphs import Graph, connected_components, diameter, make_graph, mask_of
from ..reconfig import build_gamma_graph, build_reconfig_graph
from ..scans import load_corpus, scan_corpus
from ..theorems import verify_theorem
from .models import (
    GenRequest,
    GraphIn,
    GraphOut,
    GraphsResponse,
    MdsRequest,
    MdsResponse,
    ReconRequest,
    ReconResponse,
    ReportOut,
    ScanReportOut,
    ScanRequest,
    VerifyRequest,
)

GRAPH_PARAM_KEYS = ("g", "h")


def resolve_graph(src: GraphIn) -> Graph:
    if src.spec is not None:
        return generate(parse_spec(src.spec))
    if src.g6 is not None:
        return graph6_decode(src.g6)
    return make_graph(src.n or 0, src.edges or [])


def graph_out(g: Graph) -> GraphOut:
    return GraphOut(
        n=g.n,
        edges=list(g.edges()),
        labels=list(g.labels) if g.labels else None,
        g6=graph6_encode(g),
    )


def gen(req: GenRequest) -> GraphOut:
    return graph_out(generate(parse_spec(req.spec)))


def mds(req: MdsRequest) -> MdsResponse:
    g = resolve_graph(req.graph)
    return MdsResponse(sets=enumerate_mds(g, max_n=req.max_vertices).to_lists())


def recon(req: ReconRequest) -> ReconResponse:
    g = resolve_graph(req.graph)
    build = build_gamma_graph if req.kind == "gamma" else build_reconfig_graph
    r = build(g, max_n=req.max_vertices, limit=req.limit)
    return ReconResponse(
        base_g6=graph6_encode(g),
        kind=r.kind,
        sets=r.sets.to_lists(),
        edges=list(r.edges.edges()),
        components=connected_components(r.edges),
        diameter=diameter(r.edges),
        g6=graph6_encode(r.edges),
    )


def verify(req: VerifyRequest) -> ReportOut:
    params = dict(req.params)
    for key in GRAPH_PARAM_KEYS:
        if key in params and isinstance(params[key], str):
            text = params[key]
            if text.startswith("g6:"):
                params[key] = graph6_decode(text[3:])
            else:
                params[key] = generate(parse_spec(text))
    for key in ("m", "s"):
        if isinstance(params.get(key), list):
            params[key] = mask_of(params[key])
    for key in ("parts", "matching"):
        if isinstance(params.get(key), list):
            params[key] = tuple(params[key])
    report = verify_theorem(req.theorem, **params)
    return ReportOut(**report.to_json_dict())


def scan(req: ScanRequest) -> list[ScanReportOut]:
    graphs, skipped, description = load_corpus(req.corpus, req.records)
    reports = scan_corpus(
        graphs,
        checks=req.checks,
        corpus=description,
        jobs=req.jobs,
        skipped=skipped,
        limit=req.limit,
    )
    return [ScanReportOut(**r.to_json_dict()) for r in reports]


def graphs_endpoint(n: int) -> GraphsResponse:
    records = [graph6_encode(g) for g in graphs_of_order(n)]
    return GraphsResponse(n=n, count=len(records), graphs=records)
